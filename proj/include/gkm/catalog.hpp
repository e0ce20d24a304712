#pragma once

// Model GKM graphs of the compact rank one symmetric spaces and a few
// homogeneous examples, and recognizers that bring a labeling of one of these
// shapes into its standard form.

#include <optional>
#include <string>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/lattice.hpp"

namespace gkm {

struct CrossType {
  enum class Kind { Sphere, ComplexProjective, QuaternionicProjective, CayleyPlane, RealProjective, NotRealizable };

  Kind kind = Kind::NotRealizable;
  /// S^{2n}, CP^n, HP^n, RP^{2n}; 2 for the Cayley plane.
  int n = 0;

  static CrossType sphere(int n) { return {Kind::Sphere, n}; }
  static CrossType cp(int n) { return {Kind::ComplexProjective, n}; }
  static CrossType hp(int n) { return {Kind::QuaternionicProjective, n}; }
  static CrossType op2() { return {Kind::CayleyPlane, 2}; }
  static CrossType rp(int n) { return {Kind::RealProjective, n}; }
  static CrossType none() { return {Kind::NotRealizable, 0}; }

  /// Short name: S^6, CP^3, HP^2, OP^2, RP^4, none.
  std::string str() const;
  /// Real dimension of the space; 0 for NotRealizable.
  int dimension() const;
  bool realizable() const { return kind != Kind::NotRealizable; }
  bool operator==(const CrossType&) const = default;
};

/// Equality up to the coincidences S^2 = CP^1 and S^4 = HP^1.
bool same_space(const CrossType& a, const CrossType& b);

/// A labeling written in terms of base weights. Base weights are stored as
/// numerators over a common denominator: edge e carries, up to sign,
///   (sum_i coefficients[e][i] * base_weights[i]) / denominator.
struct NormalizedLabels {
  Int denominator = 1;
  std::vector<Weight> base_weights;
  std::vector<std::vector<Int>> coefficients;
  /// The graph vertex playing the role of v0, v1, ... in the standard form.
  std::vector<VertexIndex> vertex_order;
  /// Subscript of base_weights[0] in expressions.
  int first_index = 0;

  Weight numerator(EdgeIndex e) const;
  /// Every edge expression equals its weight up to sign.
  bool reproduces(const GKMGraph& g) const;
  /// Expression of edge e as text, e.g. "a1 - a2" or "(b1 + b2 + b3 + b4)/2".
  std::string expression(EdgeIndex e, const std::string& symbol) const;
};

// ---------------------------------------------------------------------------
// Constructors

/// Two vertices joined by one edge per weight. Weights must be pairwise
/// independent.
GKMGraph build_sphere(const std::vector<Weight>& alphas);

/// Complete graph on alphas.size() vertices; edge (i, j) carries alpha_i - alpha_j.
GKMGraph build_cp(const std::vector<Weight>& alphas);

/// Complete graph with doubled edges; edge pair (i, j) carries alpha_i -+ alpha_j.
GKMGraph build_hp(const std::vector<Weight>& alphas);

/// The Cayley plane F4/Spin(9) in rank 4, weights doubled (scale 2).
GKMGraph build_op2();

/// K_{3,3} with each edge replaced by mult parallel edges (mult in {1, 2, 4}).
/// Without weights the vertices are a0..a2, b0..b2 and every edge is
/// unlabeled; with weights the graph comes from SU(3)/T^2, Sp(3)/Sp(1)^3 or
/// F4/Spin(8).
GKMGraph build_k33_family(int mult, bool with_weights);

/// e1..en in rank n.
std::vector<Weight> standard_sphere_weights(int n);
/// 0, e1, ..., en in rank n.
std::vector<Weight> standard_cp_weights(int n);
/// e1, ..., e_{n+1} in rank n + 1.
std::vector<Weight> standard_hp_weights(int n);

// ---------------------------------------------------------------------------
// Recognizers; each throws Error("not CP-normalizable") etc. on failure.

/// Base weights 0, gamma_01, ..., gamma_0n with gamma_ij = gamma_0i - gamma_0j.
NormalizedLabels normalize_cp(const GKMGraph& g);

/// Base weights 2*alpha_0, ..., 2*alpha_n (denominator 2) with the bundle
/// between v_i and v_j equal to {alpha_i + alpha_j, alpha_i - alpha_j}.
NormalizedLabels normalize_hp(const GKMGraph& g);

/// Base weights beta_1..beta_4 of the bundle v1v2 (denominator 2), with
/// alpha_1 = (b1+b2+b3+b4)/2, gamma_i = alpha_1 - beta_i and
/// alpha_i = gamma_1 - beta_i for i > 1.
NormalizedLabels normalize_op2(const GKMGraph& g);

}  // namespace gkm
