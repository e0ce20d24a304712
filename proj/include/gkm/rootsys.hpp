#pragma once

// Root systems of classical type and F4, their Weyl groups as rational
// matrices, and the GKM graph of an equal-rank homogeneous space G/K.

#include <cstddef>
#include <string>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/lattice.hpp"
#include "gkm/rational.hpp"

namespace gkm {

struct RootSystem {
  std::string name;
  /// Dimension of the coordinate space the roots live in.
  std::size_t ambient = 0;
  /// Lie rank (dimension of a maximal torus).
  std::size_t rank = 0;
  /// Roots are stored multiplied by this factor (2 for F4).
  int scale = 1;
  /// Sorted, closed under negation.
  std::vector<Weight> roots;

  /// One root from each +- pair (the one whose class representative it is).
  std::vector<Weight> positive_classes() const;
  bool contains(const Weight& w) const;
  RootSystem rescaled(int factor) const;
};

/// Parses "A2", "B4", "C3", "D4", "F4", "T3", products such as "C1xC1xC1"
/// (coordinates concatenated), and "T" for the maximal torus of whatever G it
/// is paired with (resolved by make_pair).
RootSystem root_system(const std::string& name);

/// Square rational matrix acting on column vectors.
class WeylElement {
 public:
  explicit WeylElement(std::size_t n);  // identity
  static WeylElement reflection(const Weight& alpha);

  std::size_t dim() const { return n_; }
  const Rational& at(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }

  std::vector<Rational> apply(const std::vector<Rational>& x) const;
  /// Throws if the image is not integral.
  Weight apply(const Weight& w) const;
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  bool operator==(const WeylElement&) const = default;
  bool operator<(const WeylElement& o) const { return m_ < o.m_; }

 private:
  std::size_t n_;
  std::vector<Rational> m_;
};

/// sigma_alpha(x) = x - 2 <x, alpha> / <alpha, alpha> * alpha.
WeylElement reflection(const Weight& alpha);

/// Upper bound on Weyl group enumeration: GKM_MAX_WEYL or 10000.
std::size_t weyl_bound();

/// Closure of the root reflections under composition, breadth first from the
/// identity. Throws Error once the group exceeds bound.
std::vector<WeylElement> weyl_group(const RootSystem& rs, std::size_t bound = weyl_bound());

struct RootSystemPair {
  RootSystem g;
  RootSystem k;
};

/// Resolves K against G (scale, torus ambient) and checks containment of the
/// roots, equal rank and equal ambient dimension.
RootSystemPair make_pair(const RootSystem& g, const RootSystem& k);
RootSystemPair make_pair(const std::string& g, const std::string& k);

/// Vertices are the cosets wW_K in order of first appearance; the coset of w
/// is joined to the coset of w*sigma_beta for every root class beta of G not
/// in K, with weight w(beta) at the coset of w. Half-dimension is
/// |roots(G) \ roots(K)| / 2.
GKMGraph homogeneous_gkm(const RootSystemPair& pair);

}  // namespace gkm
