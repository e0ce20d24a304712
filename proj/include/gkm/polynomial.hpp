#pragma once

// Polynomials over Q in the coordinates of the torus Lie algebra, i.e.
// elements of the symmetric algebra on the dual. Variable i pairs with the
// i-th weight coordinate, so a weight is a linear polynomial.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gkm/lattice.hpp"
#include "gkm/rational.hpp"

namespace gkm {

using Exponent = std::vector<int>;

/// Graded reverse lexicographic comparison; true if a comes before b in
/// decreasing grevlex order.
bool grevlex_greater(const Exponent& a, const Exponent& b);

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial linear(const Weight& w);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  /// Homogeneous component of the given degree.
  Polynomial component(int degree) const;
  /// Drop every term of degree above max_degree.
  Polynomial truncated(int max_degree) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

  /// Product truncated to total degree max_degree.
  static Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree);

  std::string str() const;

  bool operator==(const Polynomial& o) const = default;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

/// The monomials of one degree in a fixed number of variables, listed in
/// decreasing grevlex order.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, int degree);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  /// Index of e; throws if e is not a monomial of this basis.
  std::size_t index(const Exponent& e) const;

 private:
  std::size_t nvars_;
  int degree_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> index_;
};

/// Number of monomials of the given degree in nvars variables.
std::size_t monomial_count(std::size_t nvars, int degree);

}  // namespace gkm
