#pragma once

// Reference implementations used as oracles by the tests. They are written
// directly from the definitions and share no code with the library beyond the
// Weight and Polynomial value types.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gkm/cohomology.hpp"
#include "gkm/graph.hpp"
#include "gkm/io.hpp"
#include "gkm/polynomial.hpp"

namespace oracle {

using gkm::Rational;
using Matrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form by plain Gauss-Jordan; returns the rank.
inline std::size_t rref(Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  m.resize(r);
  return r;
}

inline std::size_t rank(Matrix m) { return rref(m); }

/// Kernel of the matrix acting on column vectors.
inline Matrix kernel(Matrix m, std::size_t cols) {
  rref(m);
  std::vector<long> pivot_of(cols, -1);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (m[r][c] != 0) {
        pivot_of[c] = static_cast<long>(r);
        break;
      }
  Matrix out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_of[f] >= 0) continue;
    std::vector<Rational> v(cols, 0);
    v[f] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_of[c] >= 0) v[c] = -m[pivot_of[c]][f];
    out.push_back(std::move(v));
  }
  return out;
}

/// All exponent vectors of total degree d in n variables.
inline std::vector<gkm::Exponent> monomials(std::size_t n, int d) {
  std::vector<gkm::Exponent> out;
  gkm::Exponent e(n, 0);
  auto rec = [&](auto& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, d);
  return out;
}

/// Degree-d equivariant classes, computed as the tuples (f_v) for which each
/// edge difference f_u - f_v equals weight * h_e for some h_e of degree d - 1.
inline std::vector<gkm::EquivariantClass> cohomology_basis(const gkm::GKMGraph& g, int d) {
  const std::size_t n = static_cast<std::size_t>(g.rank());
  const auto mono = monomials(n, d);
  const auto lower = d > 0 ? monomials(n, d - 1) : std::vector<gkm::Exponent>{};
  std::map<gkm::Exponent, std::size_t> pos;
  for (std::size_t i = 0; i < mono.size(); ++i) pos[mono[i]] = i;
  const std::size_t nv = g.vertex_count(), ne = g.edges().size();
  const std::size_t fcols = nv * mono.size();
  const std::size_t cols = fcols + ne * lower.size();
  Matrix rows;
  for (std::size_t e = 0; e < ne; ++e) {
    const auto& edge = g.edge(e);
    const auto& w = g.weight(e).rep();
    std::vector<Matrix::value_type> block(mono.size(), std::vector<Rational>(cols, 0));
    for (std::size_t m = 0; m < mono.size(); ++m) {
      block[m][edge.u * mono.size() + m] += 1;
      block[m][edge.v * mono.size() + m] -= 1;
    }
    for (std::size_t l = 0; l < lower.size(); ++l)
      for (std::size_t k = 0; k < n; ++k) {
        if (w[k] == 0) continue;
        auto ex = lower[l];
        ++ex[k];
        block[pos.at(ex)][fcols + e * lower.size() + l] -= w[k];
      }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  Matrix ker = rows.empty() ? Matrix{} : kernel(rows, cols);
  if (rows.empty())
    for (std::size_t c = 0; c < fcols; ++c) {
      std::vector<Rational> v(cols, 0);
      v[c] = 1;
      ker.push_back(v);
    }
  // Project to the f part and take a basis of the image.
  Matrix proj;
  for (auto& v : ker) proj.emplace_back(v.begin(), v.begin() + static_cast<long>(fcols));
  rref(proj);
  std::vector<gkm::EquivariantClass> out;
  for (const auto& v : proj) {
    gkm::EquivariantClass c(nv, gkm::Polynomial(n));
    for (std::size_t vi = 0; vi < nv; ++vi)
      for (std::size_t m = 0; m < mono.size(); ++m)
        if (v[vi * mono.size() + m] != 0) c[vi].add_term(mono[m], v[vi * mono.size() + m]);
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<Rational> flatten(const gkm::EquivariantClass& c, std::size_t n, int d) {
  const auto mono = monomials(n, d);
  std::vector<Rational> out;
  for (const auto& p : c)
    for (const auto& m : mono) out.push_back(p.coefficient(m));
  return out;
}

/// Whether target (homogeneous of degree d) lies in the span of H^{>0}(BT)
/// times the degree d - 1 equivariant classes.
inline bool in_positive_ideal(const gkm::GKMGraph& g, const gkm::EquivariantClass& target, int d) {
  const std::size_t n = static_cast<std::size_t>(g.rank());
  Matrix rows;
  for (const auto& b : cohomology_basis(g, d - 1))
    for (std::size_t k = 0; k < n; ++k) {
      gkm::Exponent ex(n, 0);
      ex[k] = 1;
      gkm::Polynomial xk(n);
      xk.add_term(ex, 1);
      gkm::EquivariantClass c;
      for (const auto& p : b) c.push_back(p * xk);
      rows.push_back(flatten(c, n, d));
    }
  const std::size_t before = rank(rows);
  rows.push_back(flatten(target, n, d));
  return rank(rows) == before;
}

/// Class with value f(v) at vertex v.
template <class F>
gkm::EquivariantClass make_class(const gkm::GKMGraph& g, F f) {
  gkm::EquivariantClass c;
  for (gkm::VertexIndex v = 0; v < g.vertex_count(); ++v) c.push_back(f(v));
  return c;
}

inline gkm::EquivariantClass scaled(gkm::EquivariantClass c, const Rational& s) {
  for (auto& p : c) p *= s;
  return c;
}

inline gkm::EquivariantClass minus(gkm::EquivariantClass a, const gkm::EquivariantClass& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline gkm::EquivariantClass product(const gkm::EquivariantClass& a, const gkm::EquivariantClass& b) {
  gkm::EquivariantClass c;
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(a[i] * b[i]);
  return c;
}

inline gkm::EquivariantClass component(const gkm::EquivariantClass& a, int d) {
  gkm::EquivariantClass c;
  for (const auto& p : a) c.push_back(p.component(d));
  return c;
}

/// Same graph with vertices renamed and permuted, edge list shuffled and
/// each weight written with a random sign, rebuilt through the JSON reader.
inline gkm::GKMGraph scramble(const gkm::GKMGraph& g, std::mt19937_64& rng) {
  gkm::Json j = gkm::graph_to_json(g);
  std::vector<std::string> ids = j["vertices"].get<std::vector<std::string>>();
  std::vector<std::size_t> perm(ids.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<std::string, std::string> rename;
  std::vector<std::string> fresh(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    rename[ids[i]] = "p" + std::to_string(perm[i]);
    fresh[perm[i]] = rename[ids[i]];
  }
  j["vertices"] = fresh;
  auto flip = [&](gkm::Json& w) {
    if (w.is_null() || (rng() & 1)) return;
    for (auto& x : w) x = -x.get<gkm::Int>();
  };
  std::vector<gkm::Json> edges(j["edges"].begin(), j["edges"].end());
  std::shuffle(edges.begin(), edges.end(), rng);
  for (auto& e : edges) {
    e["u"] = rename[e["u"].get<std::string>()];
    e["v"] = rename[e["v"].get<std::string>()];
    if (rng() & 1) std::swap(e["u"], e["v"]);
    flip(e["weight"]);
  }
  j["edges"] = edges;
  for (auto& s : j["star_edges"]) {
    s["v"] = rename[s["v"].get<std::string>()];
    flip(s["weight"]);
  }
  return gkm::graph_from_json(j);
}

}  // namespace oracle
