#include "gkm/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gkm/error.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

Weight Weight::unit(std::size_t rank, std::size_t i) {
  Weight w = zero(rank);
  w.coords_.at(i) = 1;
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& c : w.coords_) c = -c;
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw PreconditionError("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw PreconditionError("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight operator*(Int s, Weight a) {
  for (auto& c : a.coords_) c *= s;
  return a;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

WeightClass canonicalize(const Weight& w) {
  auto it = std::find_if(w.coords().begin(), w.coords().end(), [](Int c) { return c != 0; });
  if (it == w.coords().end()) throw PreconditionError("zero weight");
  return WeightClass(*it < 0 ? -w : w);
}

std::size_t rank_of(std::span<const Weight> ws) {
  if (ws.empty()) return 0;
  std::vector<std::vector<Rational>> m;
  m.reserve(ws.size());
  for (const auto& w : ws) {
    if (w.rank() != ws.front().rank()) throw PreconditionError("weight rank mismatch");
    m.emplace_back(w.coords().begin(), w.coords().end());
  }
  return dense_rank(std::move(m));
}

std::size_t rank_of(std::span<const WeightClass> ws) {
  std::vector<Weight> reps;
  reps.reserve(ws.size());
  for (const auto& w : ws) reps.push_back(w.rep());
  return rank_of(reps);
}

bool is_k_independent(std::span<const WeightClass> ws, int k) {
  if (k < 2) throw PreconditionError("k-independence needs k >= 2");
  const std::size_t n = ws.size();
  if (n <= static_cast<std::size_t>(k)) return rank_of(ws) == n;

  // Walk all k-subsets in lexicographic order.
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Weight> sub(k);
  while (true) {
    for (int i = 0; i < k; ++i) sub[i] = ws[idx[i]].rep();
    if (rank_of(sub) != static_cast<std::size_t>(k)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

Int gcd_of(const Weight& w) {
  Int g = 0;
  for (Int c : w.coords()) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

PrimitiveDecomposition primitive_decompose(const WeightClass& w) {
  const Int g = gcd_of(w.rep());
  std::vector<Int> dir(w.rep().coords());
  for (auto& c : dir) c /= g;
  return {g, Weight(std::move(dir))};
}

bool are_coprime(const WeightClass& a, const WeightClass& b) {
  return std::gcd(primitive_decompose(a).scale, primitive_decompose(b).scale) == 1;
}

bool in_span2(const WeightClass& w, const WeightClass& a, const WeightClass& b) {
  const std::vector<Weight> ab{a.rep(), b.rep()};
  if (rank_of(ab) != 2) throw PreconditionError("in_span2: spanning weights are dependent");
  const std::vector<Weight> wab{a.rep(), b.rep(), w.rep()};
  return rank_of(wab) == 2;
}

SignPair signed_sum(const Weight& w, const Weight& a, const Weight& b) {
  for (int s : {1, -1})
    for (int t : {1, -1})
      if (w == s * a + t * b) return {s, t};
  return {};
}

std::vector<Weight> lattice_basis(std::span<const Weight> ws) {
  if (ws.empty()) return {};
  const std::size_t r = ws.front().rank();
  std::vector<std::vector<BigInt>> rows;
  for (const auto& w : ws) rows.emplace_back(w.coords().begin(), w.coords().end());

  // Row-style Hermite normal form by repeated Euclidean steps per column.
  std::size_t top = 0;
  for (std::size_t col = 0; col < r && top < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        BigInt q = rows[i][col] / rows[top][col];
        for (std::size_t j = col; j < r; ++j) rows[i][j] -= q * rows[top][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (top < rows.size() && rows[top][col] != 0) {
      if (rows[top][col] < 0)
        for (auto& x : rows[top]) x = -x;
      // Reduce the entries above the pivot into [0, pivot).
      for (std::size_t i = 0; i < top; ++i) {
        BigInt q = rows[i][col] / rows[top][col];
        if (rows[i][col] - q * rows[top][col] < 0) q -= 1;
        for (std::size_t j = col; j < r; ++j) rows[i][j] -= q * rows[top][j];
      }
      ++top;
    }
  }
  std::vector<Weight> basis;
  for (std::size_t i = 0; i < top; ++i) {
    std::vector<Int> c;
    for (const auto& x : rows[i]) c.push_back(x.convert_to<Int>());
    basis.emplace_back(std::move(c));
  }
  return basis;
}

Weight lattice_coordinates(const Weight& w, std::span<const Weight> basis) {
  // The basis is in echelon form: solve column by column at the pivots.
  std::vector<Rational> rest(w.coords().begin(), w.coords().end());
  std::vector<Int> coeffs;
  for (const auto& b : basis) {
    auto it = std::find_if(b.coords().begin(), b.coords().end(), [](Int c) { return c != 0; });
    if (it == b.coords().end()) throw PreconditionError("lattice basis has a zero row");
    const std::size_t p = static_cast<std::size_t>(it - b.coords().begin());
    Rational c = rest[p] / Rational(*it);
    if (!is_integer(c)) throw PreconditionError("weight " + w.str() + " is not in the lattice");
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= c * Rational(b[j]);
    coeffs.push_back(numerator(c).convert_to<Int>());
  }
  for (const auto& x : rest)
    if (x != 0) throw PreconditionError("weight " + w.str() + " is not in the lattice");
  return Weight(std::move(coeffs));
}

}  // namespace gkm
