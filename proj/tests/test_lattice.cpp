#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "gkm/error.hpp"
#include "gkm/lattice.hpp"
#include "support.hpp"

using namespace gkm;

namespace {

Weight random_weight(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<Int> d(-bound, bound);
  std::vector<Int> c(n);
  do {
    for (auto& x : c) x = d(rng);
  } while (std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; }));
  return Weight(c);
}

std::size_t oracle_rank(const std::vector<Weight>& ws) {
  oracle::Matrix m;
  for (const auto& w : ws) m.emplace_back(w.coords().begin(), w.coords().end());
  return oracle::rank(m);
}

std::vector<WeightClass> classes(const std::vector<Weight>& ws) {
  std::vector<WeightClass> out;
  for (const auto& w : ws) out.push_back(canonicalize(w));
  return out;
}

Int determinant(oracle::Matrix m) {
  Rational det = 1;
  for (std::size_t c = 0; c < m.size(); ++c) {
    std::size_t p = c;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < m.size(); ++i) {
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < m.size(); ++k) m[i][k] -= f * m[c][k];
    }
  }
  return static_cast<Int>(numerator(det));
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(r), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// gcd of all r x r minors.
Int minor_gcd(const std::vector<Weight>& ws, std::size_t r) {
  Int g = 0;
  for (const auto& rows : subsets(ws.size(), r))
    for (const auto& cols : subsets(ws.front().rank(), r)) {
      oracle::Matrix m;
      for (auto i : rows) {
        std::vector<Rational> row;
        for (auto j : cols) row.emplace_back(ws[i][j]);
        m.push_back(row);
      }
      g = std::gcd(g, determinant(m));
    }
  return g;
}

}  // namespace

TEST_CASE("canonical sign representative") {
  CHECK(canonicalize({0, -3, 2}).rep() == Weight{0, 3, -2});
  CHECK(canonicalize({1, -1}).rep() == Weight{1, -1});
  CHECK(canonicalize({-1, 1}) == canonicalize({1, -1}));
  CHECK(canonicalize({2, 0}) != canonicalize({1, 0}));
  CHECK_THROWS_AS(canonicalize({0, 0, 0}), PreconditionError);
}

TEST_CASE("rank agrees with Gauss-Jordan on random families") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5, count = 1 + rng() % 6;
    std::vector<Weight> ws;
    for (std::size_t i = 0; i < count; ++i) ws.push_back(random_weight(rng, n, trial % 2 ? 2 : 9));
    CHECK(rank_of(ws) == oracle_rank(ws));
  }
}

TEST_CASE("k-independence") {
  const auto e = classes({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}});
  CHECK(is_k_independent(e, 2));
  CHECK_FALSE(is_k_independent(e, 3));  // e1, e2, e1 + e2
  const auto generic = classes({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  CHECK(is_k_independent(generic, 3));
  // Fewer weights than k: the whole family must be independent.
  CHECK(is_k_independent(classes({{1, 0}, {0, 1}}), 3));
  CHECK_FALSE(is_k_independent(classes({{1, 2}, {2, 4}}), 3));
  CHECK_THROWS_AS(is_k_independent(e, 1), PreconditionError);
}

TEST_CASE("k-independence matches subset enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 3, count = 2 + rng() % 5;
    std::vector<Weight> ws;
    for (std::size_t i = 0; i < count; ++i) ws.push_back(random_weight(rng, n, 2));
    const int k = 2 + static_cast<int>(rng() % 2);
    bool expected = true;
    const std::size_t size = std::min<std::size_t>(k, count);
    std::vector<bool> pick(count, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      std::vector<Weight> sub;
      for (std::size_t i = 0; i < count; ++i)
        if (pick[i]) sub.push_back(ws[i]);
      if (oracle_rank(sub) != sub.size()) expected = false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    CHECK(is_k_independent(classes(ws), k) == expected);
  }
}

TEST_CASE("primitive decomposition and coprimality") {
  const auto d = primitive_decompose(canonicalize({-4, 6, 0}));
  CHECK(d.scale == 2);
  CHECK(d.direction == Weight{2, -3, 0});
  CHECK(gcd_of({0, -6, 9}) == 3);
  CHECK(are_coprime(canonicalize({2, 0}), canonicalize({3, 3})));
  CHECK_FALSE(are_coprime(canonicalize({2, 0}), canonicalize({2, 4})));
  CHECK(are_coprime(canonicalize({1, 0}), canonicalize({0, 1})));
}

TEST_CASE("signed sums") {
  const Weight a{1, 0, 0}, b{0, 1, 0};
  auto s = signed_sum({1, -1, 0}, a, b);
  REQUIRE(s);
  CHECK(s.a == 1);
  CHECK(s.b == -1);
  s = signed_sum({-1, -1, 0}, a, b);
  REQUIRE(s);
  CHECK(s.a == -1);
  CHECK(s.b == -1);
  CHECK_FALSE(signed_sum({2, 1, 0}, a, b));
  CHECK(in_span2(canonicalize({3, -5, 0}), canonicalize(a), canonicalize(b)));
  CHECK_FALSE(in_span2(canonicalize({0, 0, 1}), canonicalize(a), canonicalize(b)));
}

TEST_CASE("lattice basis spans exactly the generated lattice") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4, count = 1 + rng() % 5;
    std::vector<Weight> ws;
    for (std::size_t i = 0; i < count; ++i) ws.push_back(random_weight(rng, n, 6));
    const auto basis = lattice_basis(ws);
    CHECK(basis.size() == oracle_rank(ws));
    // Every generator has integer coordinates in the basis.
    for (const auto& w : ws) {
      const Weight c = lattice_coordinates(w, basis);
      Weight back = Weight::zero(n);
      for (std::size_t i = 0; i < basis.size(); ++i) back += c[i] * basis[i];
      CHECK(back == w);
    }
    // The gcd of the maximal minors is a lattice invariant.
    CHECK(minor_gcd(basis, basis.size()) == minor_gcd(ws, basis.size()));
  }
  const std::vector<Weight> even{{2, 0}, {2, 4}};
  const auto b = lattice_basis(even);
  CHECK_THROWS(lattice_coordinates({1, 0}, b));
  CHECK_NOTHROW(lattice_coordinates({0, 4}, b));
}
