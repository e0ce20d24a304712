#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>

namespace gkm {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace gkm
