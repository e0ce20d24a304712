#include "gkm/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gkm {

TupleSpace::TupleSpace(std::size_t vertices, std::size_t nvars, int degree)
    : vertices_(vertices), basis_(nvars, degree) {}

SparseVector TupleSpace::encode(const EquivariantClass& c) const {
  if (c.size() != vertices_) throw PreconditionError("class has the wrong number of vertices");
  SparseVector out;
  for (VertexIndex v = 0; v < vertices_; ++v) {
    std::vector<std::pair<std::size_t, Rational>> part;
    for (const auto& [e, x] : c[v].terms()) {
      if (std::accumulate(e.begin(), e.end(), 0) != basis_.degree()) continue;
      part.emplace_back(column(v, e), x);
    }
    std::sort(part.begin(), part.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

EquivariantClass TupleSpace::decode(const SparseVector& v) const {
  EquivariantClass c(vertices_, Polynomial(basis_.nvars()));
  for (const auto& [col, x] : v) c[col / basis_.size()].add_term(basis_[col % basis_.size()], x);
  return c;
}

namespace {

/// Restriction of degree-d polynomials to the hyperplane ker(alpha): the
/// first variable p with alpha_p != 0 is replaced by -(sum alpha_q x_q)/alpha_p.
/// image[i] lists (output monomial index, coefficient) for input monomial i.
struct Restriction {
  std::vector<std::vector<std::pair<std::size_t, Rational>>> image;
  std::size_t outputs = 0;
};

Restriction restrict_to_kernel(const Weight& alpha, const MonomialBasis& basis) {
  const std::size_t r = alpha.rank();
  std::size_t p = 0;
  while (alpha[p] == 0) ++p;
  Polynomial sub(r);
  for (std::size_t q = 0; q < r; ++q) {
    if (q == p || alpha[q] == 0) continue;
    Exponent e(r, 0);
    e[q] = 1;
    sub.add_term(e, Rational(-alpha[q], alpha[p]));
  }
  std::vector<Polynomial> powers{Polynomial::constant(r, 1)};
  for (int k = 1; k <= basis.degree(); ++k) powers.push_back(powers.back() * sub);

  Restriction out;
  std::map<Exponent, std::size_t> index;
  out.image.resize(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Exponent rest = basis[i];
    const int k = rest[p];
    rest[p] = 0;
    for (const auto& [e, c] : powers[k].terms()) {
      Exponent m = e;
      for (std::size_t q = 0; q < r; ++q) m[q] += rest[q];
      auto [it, fresh] = index.try_emplace(m, index.size());
      out.image[i].emplace_back(it->second, c);
    }
  }
  out.outputs = index.size();
  return out;
}

void sort_row(SparseVector& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

std::vector<SparseVector> congruence_rows(const GKMGraph& g, const TupleSpace& space) {
  g.require_labeled("cohomology");
  const MonomialBasis& basis = space.monomials();
  std::map<WeightClass, Restriction> cache;
  std::vector<SparseVector> rows;
  for (const auto& e : g.edges()) {
    auto it = cache.find(*e.weight);
    if (it == cache.end()) it = cache.emplace(*e.weight, restrict_to_kernel(e.weight->rep(), basis)).first;
    const Restriction& R = it->second;
    std::vector<SparseVector> block(R.outputs);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (const auto& [o, c] : R.image[i]) {
        block[o].emplace_back(e.u * basis.size() + i, c);
        block[o].emplace_back(e.v * basis.size() + i, -c);
      }
    }
    for (auto& row : block) {
      sort_row(row);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

Echelon constraint_echelon(const GKMGraph& g, const TupleSpace& space) {
  Echelon ech(space.dim());
  for (const auto& row : congruence_rows(g, space)) ech.insert(row);
  return ech;
}

Rational dot(const SparseVector& a, const std::vector<Rational>& dense) {
  Rational s = 0;
  for (const auto& [c, x] : a) s += x * dense[c];
  return s;
}

}  // namespace

bool satisfies_congruences(const GKMGraph& g, const EquivariantClass& c) {
  int top = 0;
  for (const auto& p : c) top = std::max(top, p.degree());
  for (int d = 0; d <= top; ++d) {
    TupleSpace space(g.vertex_count(), static_cast<std::size_t>(g.rank()), d);
    std::vector<Rational> dense(space.dim(), Rational(0));
    for (const auto& [col, x] : space.encode(c)) dense[col] = x;
    for (const auto& row : congruence_rows(g, space))
      if (dot(row, dense) != 0) return false;
  }
  return true;
}

std::vector<SparseVector> equivariant_basis(const GKMGraph& g, const TupleSpace& space) {
  return constraint_echelon(g, space).nullspace();
}

std::vector<std::int64_t> equivariant_dims(const GKMGraph& g, int cutoff) {
  if (cutoff < 0) throw PreconditionError("cutoff must be non-negative");
  std::vector<std::int64_t> dims;
  for (int d = 0; d <= cutoff; ++d) {
    TupleSpace space(g.vertex_count(), static_cast<std::size_t>(g.rank()), d);
    const Echelon ech = constraint_echelon(g, space);
    dims.push_back(static_cast<std::int64_t>(space.dim() - ech.rank()));
  }
  return dims;
}

std::vector<std::int64_t> betti_from_dims(const std::vector<std::int64_t>& dims, int rank) {
  std::vector<std::int64_t> binom(static_cast<std::size_t>(rank) + 1, 1);
  for (int i = 1; i <= rank; ++i) binom[i] = binom[i - 1] * (rank - i + 1) / i;
  std::vector<std::int64_t> b(dims.size(), 0);
  for (std::size_t d = 0; d < dims.size(); ++d)
    for (std::size_t i = 0; i <= d && i <= static_cast<std::size_t>(rank); ++i)
      b[d] += (i % 2 ? -1 : 1) * binom[i] * dims[d - i];
  return b;
}

std::vector<std::int64_t> betti_numbers(const GKMGraph& g, int cutoff) {
  const auto b = betti_from_dims(equivariant_dims(g, cutoff), g.rank());
  const char* msg = "graph is not the GKM graph of an equivariantly formal action at this cutoff";
  for (auto x : b)
    if (x < 0) throw FormalityError(msg);
  if (cutoff >= g.half_dim()) {
    const auto total = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (total != static_cast<std::int64_t>(g.vertex_count())) throw FormalityError(msg);
  }
  return b;
}

EquivariantClass equivariant_pontryagin(const GKMGraph& g, int top) {
  g.require_labeled("Pontryagin classes");
  if (top < 0) throw PreconditionError("top must be non-negative");
  const auto r = static_cast<std::size_t>(g.rank());
  const Rational unscale = Rational(1, g.scale());
  EquivariantClass out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    Polynomial p = Polynomial::constant(r, 1);
    for (EdgeIndex e : g.incident(v)) {
      const Polynomial a = Polynomial::linear(g.weight(e).rep()) * unscale;
      p = Polynomial::multiply_truncated(p, Polynomial::constant(r, 1) + a * a, 2 * top);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<VertexIndex> canonical_vertex_order(const GKMGraph& g) {
  std::vector<std::vector<WeightClass>> keys;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    std::vector<WeightClass> k;
    for (EdgeIndex e : g.incident(v)) k.push_back(g.weight(e));
    std::sort(k.begin(), k.end());
    keys.push_back(std::move(k));
  }
  std::vector<VertexIndex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) { return keys[a] < keys[b]; });
  return order;
}

OrdinaryQuotient::OrdinaryQuotient(const GKMGraph& g, int degree)
    : order_(canonical_vertex_order(g)),
      space_(g.vertex_count(), static_cast<std::size_t>(g.rank()), degree),
      image_(space_.dim()),
      full_(space_.dim()) {
  if (degree < 0) throw PreconditionError("degree must be non-negative");
  std::vector<std::size_t> position(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = i;
  std::vector<std::string> ids;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) ids.push_back(g.vertex_id(v));
  const GKMGraph canon = relabel_vertices(g, position, ids);

  for (const auto& row : equivariant_basis(canon, space_)) full_.insert(row);
  full_.make_reduced();

  if (degree > 0) {
    const TupleSpace lower(g.vertex_count(), space_.monomials().nvars(), degree - 1);
    const std::size_t lm = lower.monomials().size(), m = space_.monomials().size();
    for (const auto& f : equivariant_basis(canon, lower)) {
      for (std::size_t k = 0; k < space_.monomials().nvars(); ++k) {
        SparseVector shifted;
        for (const auto& [col, x] : f) {
          Exponent e = lower.monomials()[col % lm];
          ++e[k];
          shifted.emplace_back((col / lm) * m + space_.monomials().index(e), x);
        }
        sort_row(shifted);
        image_.insert(shifted);
      }
    }
  }
  image_.make_reduced();
  for (const auto& [p, row] : full_.rows())
    if (!image_.rows().count(p)) pivots_.push_back(p);
}

SparseVector OrdinaryQuotient::to_canonical(const EquivariantClass& c) const {
  EquivariantClass permuted;
  for (VertexIndex v : order_) permuted.push_back(c.at(v));
  return space_.encode(permuted);
}

std::vector<Rational> OrdinaryQuotient::coordinates(const EquivariantClass& c) const {
  const SparseVector v = to_canonical(c);
  if (!full_.contains(v)) throw Error("class does not satisfy the edge congruences");
  const SparseVector rem = image_.reduce(v);
  std::vector<Rational> out;
  for (std::size_t p : pivots_) {
    auto it = std::lower_bound(rem.begin(), rem.end(), p, [](const auto& a, std::size_t c) { return a.first < c; });
    out.push_back(it != rem.end() && it->first == p ? it->second : Rational(0));
  }
  return out;
}

OrdinaryPontryagin ordinary_pontryagin(const GKMGraph& g) {
  const int m = g.half_dim();
  const auto betti = betti_numbers(g, m);
  const auto total = equivariant_pontryagin(g, m / 2);
  OrdinaryPontryagin out;
  for (int j = 0; 2 * j <= m; ++j) {
    const OrdinaryQuotient q(g, 2 * j);
    if (static_cast<std::int64_t>(q.dim()) != betti[2 * j])
      throw Error("quotient in degree " + std::to_string(4 * j) + " has dimension " + std::to_string(q.dim()) +
                  " but the Betti number is " + std::to_string(betti[2 * j]));
    EquivariantClass pj;
    for (const auto& p : total) pj.push_back(p.component(2 * j));
    out.degrees.push_back(j);
    out.quotient_dims.push_back(q.dim());
    out.coords.push_back(q.coordinates(pj));
  }
  return out;
}

IntegerReport integer_precondition(const GKMGraph& g) {
  if (!g.orientable()) throw PreconditionError("integer coefficients need an orientable graph");
  g.require_labeled("integer checks");
  IntegerReport rep;
  rep.lattice_mode = g.scale() > 1;
  std::vector<Weight> basis;
  if (rep.lattice_mode) {
    std::vector<Weight> all;
    for (EdgeIndex e = 0; e < g.edges().size(); ++e) all.push_back(g.weight(e).rep());
    basis = lattice_basis(all);
  }
  auto measured = [&](EdgeIndex e) {
    return rep.lattice_mode ? canonicalize(lattice_coordinates(g.weight(e).rep(), basis)) : g.weight(e);
  };
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    IntegerVertexReport vr;
    vr.vertex = v;
    const auto& inc = g.incident(v);
    std::vector<WeightClass> ws;
    for (EdgeIndex e : inc) ws.push_back(measured(e));
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (primitive_decompose(ws[i]).scale != 1) vr.primitive = false;
      for (std::size_t j = i + 1; j < ws.size(); ++j)
        if (!are_coprime(ws[i], ws[j])) {
          vr.coprime = false;
          vr.bad_pairs.emplace_back(inc[i], inc[j]);
        }
    }
    rep.coprime = rep.coprime && vr.coprime;
    rep.primitive = rep.primitive && vr.primitive;
    rep.vertices.push_back(std::move(vr));
  }
  return rep;
}

}  // namespace gkm
