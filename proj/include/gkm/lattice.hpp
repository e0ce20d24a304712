#pragma once

// Integer weight-lattice arithmetic. Weights are linear forms on the Lie
// algebra of a torus, written in the basis dual to the integer lattice, and
// are only defined up to sign. All rank tests are exact.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

using Int = std::int64_t;

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Int> coords) : coords_(coords) {}

  static Weight zero(std::size_t rank) { return Weight(std::vector<Int>(rank, 0)); }
  static Weight unit(std::size_t rank, std::size_t i);

  std::size_t rank() const { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Int>& coords() const { return coords_; }
  bool is_zero() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Int s, Weight a);

  std::string str() const;

  auto operator<=>(const Weight&) const = default;

 private:
  std::vector<Int> coords_;
};

/// A weight up to sign. The representative has its first nonzero coordinate
/// positive, so equality of classes is equality of representatives.
class WeightClass {
 public:
  const Weight& rep() const { return rep_; }
  std::size_t rank() const { return rep_.rank(); }
  std::string str() const { return rep_.str(); }

  auto operator<=>(const WeightClass&) const = default;

 private:
  friend WeightClass canonicalize(const Weight& w);
  explicit WeightClass(Weight w) : rep_(std::move(w)) {}
  Weight rep_;
};

struct PrimitiveDecomposition {
  Int scale = 1;
  Weight direction;
};

/// Throws PreconditionError("zero weight") for the zero vector.
WeightClass canonicalize(const Weight& w);

/// Exact rank of a family of integer vectors of equal length.
std::size_t rank_of(std::span<const Weight> ws);
std::size_t rank_of(std::span<const WeightClass> ws);

/// True iff every k-element subfamily is linearly independent over Q. A
/// family with fewer than k members must be independent as a whole.
bool is_k_independent(std::span<const WeightClass> ws, int k);

PrimitiveDecomposition primitive_decompose(const WeightClass& w);

/// gcd of the scales of the two weights is one.
bool are_coprime(const WeightClass& a, const WeightClass& b);

/// Whether w lies in the rational span of a and b; a, b must be independent.
bool in_span2(const WeightClass& w, const WeightClass& a, const WeightClass& b);

/// The unique (s, t) in {+1,-1}^2 with w == s*a + t*b, if any.
struct SignPair {
  int a = 0;
  int b = 0;
  explicit operator bool() const { return a != 0; }
};
SignPair signed_sum(const Weight& w, const Weight& a, const Weight& b);

Int gcd_of(const Weight& w);

/// Hermite normal form rows of the lattice spanned by ws (zero rows dropped).
std::vector<Weight> lattice_basis(std::span<const Weight> ws);

/// Integer coordinates of w in the given lattice basis; throws if w is not in
/// the lattice.
Weight lattice_coordinates(const Weight& w, std::span<const Weight> basis);

}  // namespace gkm
