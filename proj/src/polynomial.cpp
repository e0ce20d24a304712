#include "gkm/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "gkm/error.hpp"

namespace gkm {

namespace {

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

void enumerate(std::size_t nvars, int degree, std::size_t pos, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (int k = degree; k >= 0; --k) {
    cur[pos] = k;
    enumerate(nvars, degree - k, pos + 1, cur, out);
  }
}

}  // namespace

bool grevlex_greater(const Exponent& a, const Exponent& b) {
  const int da = total(a), db = total(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::linear(const Weight& w) {
  Polynomial p(w.rank());
  for (std::size_t i = 0; i < w.rank(); ++i) {
    Exponent e(w.rank(), 0);
    e[i] = 1;
    p.add_term(e, Rational(w[i]));
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw PreconditionError("polynomial: exponent length mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::component(int degree) const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_)
    if (total(e) == degree) p.terms_.emplace(e, c);
  return p;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_)
    if (total(e) <= max_degree) p.terms_.emplace(e, c);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Polynomial Polynomial::multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree) {
  if (a.nvars_ != b.nvars_) throw PreconditionError("polynomial: variable count mismatch");
  Polynomial p(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    const int da = total(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total(eb) > max_degree) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return Polynomial::multiply_truncated(a, b, std::numeric_limits<int>::max());
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return grevlex_greater(x.first, y.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    const bool constant_term = total(e) == 0;
    Rational mag = c < 0 ? Rational(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (mag != 1 || constant_term) os << mag.str() << (constant_term ? "" : "*");
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (first_var ? "" : "*") << 'x' << i;
      if (e[i] > 1) os << '^' << e[i];
      first_var = false;
    }
  }
  return os.str();
}

MonomialBasis::MonomialBasis(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (degree < 0) return;
  if (nvars == 0) {
    if (degree == 0) monomials_.emplace_back();
  } else {
    Exponent cur(nvars, 0);
    enumerate(nvars, degree, 0, cur, monomials_);
  }
  std::sort(monomials_.begin(), monomials_.end(), grevlex_greater);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw Error("monomial not in basis");
  return it->second;
}

std::size_t monomial_count(std::size_t nvars, int degree) {
  if (degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // C(degree + nvars - 1, nvars - 1)
  std::size_t n = static_cast<std::size_t>(degree) + nvars - 1, k = nvars - 1;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace gkm
