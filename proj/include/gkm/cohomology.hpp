#pragma once

// Equivariant cohomology of a GKM graph as tuples of polynomials satisfying
// the edge congruences, ordinary Betti numbers by dividing out H*(BT), and
// Pontryagin classes from the isotropy weights.
//
// Degrees are polynomial degrees: polynomial degree d sits in cohomological
// degree 2d.

#include <cstdint>
#include <vector>

#include "gkm/error.hpp"
#include "gkm/graph.hpp"
#include "gkm/linalg.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

class FormalityError : public Error {
 public:
  using Error::Error;
};

/// One polynomial per vertex.
using EquivariantClass = std::vector<Polynomial>;

/// Coordinates of degree-d vertex tuples: column v * |monomials| + m holds the
/// coefficient of monomial m (decreasing grevlex) at vertex v.
class TupleSpace {
 public:
  TupleSpace(std::size_t vertices, std::size_t nvars, int degree);

  std::size_t vertices() const { return vertices_; }
  const MonomialBasis& monomials() const { return basis_; }
  std::size_t dim() const { return vertices_ * basis_.size(); }
  std::size_t column(VertexIndex v, const Exponent& e) const { return v * basis_.size() + basis_.index(e); }

  /// Degree-d components of the class as a coordinate vector.
  SparseVector encode(const EquivariantClass& c) const;
  EquivariantClass decode(const SparseVector& v) const;

 private:
  std::size_t vertices_;
  MonomialBasis basis_;
};

/// The linear constraints "f_u - f_v vanishes on ker(weight)" for every
/// ordinary edge, in degree d; star edges impose nothing.
std::vector<SparseVector> congruence_rows(const GKMGraph& g, const TupleSpace& space);

/// Whether every homogeneous component satisfies every edge congruence.
bool satisfies_congruences(const GKMGraph& g, const EquivariantClass& c);

/// A basis of the degree-d part of the equivariant cohomology.
std::vector<SparseVector> equivariant_basis(const GKMGraph& g, const TupleSpace& space);

/// dims[d] for d = 0..cutoff.
std::vector<std::int64_t> equivariant_dims(const GKMGraph& g, int cutoff);

/// Betti numbers b[d] = dim H^{2d}(M) for d = 0..cutoff, from the series
/// dims(s) * (1 - s)^rank, s of polynomial degree one. Throws FormalityError
/// if some b[d] is negative or, when cutoff >= half_dim, if they do not sum to
/// the vertex count.
std::vector<std::int64_t> betti_numbers(const GKMGraph& g, int cutoff);
std::vector<std::int64_t> betti_from_dims(const std::vector<std::int64_t>& dims, int rank);

/// Per vertex, prod over incident edges of (1 + weight^2), truncated to
/// polynomial degree 2 * top.
EquivariantClass equivariant_pontryagin(const GKMGraph& g, int top);

struct OrdinaryPontryagin {
  /// Index j of p_j, for 4j <= 2 * half_dim.
  std::vector<int> degrees;
  /// dim H^{4j}(M), i.e. of the quotient the coordinates live in.
  std::vector<std::size_t> quotient_dims;
  /// Coordinates of p_j in the quotient basis.
  std::vector<std::vector<Rational>> coords;
};

/// The degree-d quotient of H_T by the image of H^{>0}(BT), with a basis
/// fixed by pivoting in a vertex order that depends only on the labels.
class OrdinaryQuotient {
 public:
  OrdinaryQuotient(const GKMGraph& g, int degree);

  int degree() const { return space_.monomials().degree(); }
  std::size_t dim() const { return pivots_.size(); }
  const TupleSpace& space() const { return space_; }
  /// Coordinates of an equivariant class of this degree (given in the input
  /// vertex order) in the quotient basis. Throws if it is not in H_T.
  std::vector<Rational> coordinates(const EquivariantClass& c) const;

 private:
  SparseVector to_canonical(const EquivariantClass& c) const;

  std::vector<VertexIndex> order_;  // canonical position -> vertex
  TupleSpace space_;
  Echelon image_;
  Echelon full_;
  std::vector<std::size_t> pivots_;
};

/// Canonical vertex order: by sorted incident weight classes, ties kept in
/// input order.
std::vector<VertexIndex> canonical_vertex_order(const GKMGraph& g);

/// Throws Error if a quotient dimension differs from the Betti number.
OrdinaryPontryagin ordinary_pontryagin(const GKMGraph& g);

struct IntegerVertexReport {
  VertexIndex vertex = 0;
  bool coprime = true;
  bool primitive = true;
  /// Incident edge pairs whose weights are not coprime.
  std::vector<std::pair<EdgeIndex, EdgeIndex>> bad_pairs;
};

struct IntegerReport {
  std::vector<IntegerVertexReport> vertices;
  bool coprime = true;
  bool primitive = true;
  /// Weights were measured in the lattice they span (scaled graphs).
  bool lattice_mode = false;
};

/// Pairwise coprimality and primitivity of the weights at every vertex. For a
/// graph with scale > 1 the weights are measured in the lattice spanned by all
/// its weights. Non-orientable graphs are refused.
IntegerReport integer_precondition(const GKMGraph& g);

}  // namespace gkm
