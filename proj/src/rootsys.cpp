#include "gkm/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "gkm/error.hpp"

namespace gkm {

namespace {

Weight signed_pair(std::size_t n, std::size_t i, Int si, std::size_t j, Int sj, Int mult = 1) {
  Weight w = Weight::zero(n);
  std::vector<Int> c = w.coords();
  c[i] += si * mult;
  c[j] += sj * mult;
  return Weight(c);
}

RootSystem simple_factor(char type, int n) {
  RootSystem rs;
  rs.name = std::string(1, type) + std::to_string(n);
  std::set<Weight> roots;
  auto add_pm = [&](const Weight& w) {
    roots.insert(w);
    roots.insert(-w);
  };
  const auto un = static_cast<std::size_t>(n);
  switch (type) {
    case 'A':
      if (n < 1) fail("A_n needs n >= 1");
      rs.ambient = un + 1;
      rs.rank = un;
      for (std::size_t i = 0; i <= un; ++i)
        for (std::size_t j = i + 1; j <= un; ++j) add_pm(signed_pair(un + 1, i, 1, j, -1));
      break;
    case 'B':
    case 'C':
    case 'D':
      if (n < 1 || (type == 'D' && n < 2)) fail(rs.name + ": rank too small");
      rs.ambient = rs.rank = un;
      for (std::size_t i = 0; i < un; ++i) {
        if (type == 'B') add_pm(Weight::unit(un, i));
        if (type == 'C') add_pm(2 * Weight::unit(un, i));
        for (std::size_t j = i + 1; j < un; ++j) {
          add_pm(signed_pair(un, i, 1, j, 1));
          add_pm(signed_pair(un, i, 1, j, -1));
        }
      }
      break;
    case 'F':
      if (n != 4) fail("only F4 is supported among F types");
      rs.ambient = rs.rank = 4;
      rs.scale = 2;
      for (std::size_t i = 0; i < 4; ++i) {
        add_pm(2 * Weight::unit(4, i));
        for (std::size_t j = i + 1; j < 4; ++j) {
          add_pm(signed_pair(4, i, 1, j, 1, 2));
          add_pm(signed_pair(4, i, 1, j, -1, 2));
        }
      }
      for (int mask = 0; mask < 16; ++mask) {
        std::vector<Int> c(4);
        for (int b = 0; b < 4; ++b) c[b] = (mask >> b) & 1 ? -1 : 1;
        roots.insert(Weight(c));
      }
      break;
    default:
      fail(std::string("unknown root system type '") + type + "'");
  }
  rs.roots.assign(roots.begin(), roots.end());
  return rs;
}

RootSystem torus(int n) {
  RootSystem rs;
  rs.name = n > 0 ? "T" + std::to_string(n) : "T";
  rs.ambient = rs.rank = static_cast<std::size_t>(std::max(n, 0));
  return rs;
}

RootSystem parse_factor(const std::string& s) {
  static const std::regex simple(R"(([ABCDF])(\d+))");
  static const std::regex tor(R"(T(\d*))");
  std::smatch m;
  if (std::regex_match(s, m, simple)) return simple_factor(m[1].str()[0], std::stoi(m[2].str()));
  if (std::regex_match(s, m, tor)) return torus(m[1].str().empty() ? 0 : std::stoi(m[1].str()));
  fail("cannot parse root system '" + s + "'");
}

RootSystem product(const std::vector<RootSystem>& fs, const std::string& name) {
  int scale = 1;
  for (const auto& f : fs) scale = std::lcm(scale, f.scale);
  RootSystem rs;
  rs.name = name;
  rs.scale = scale;
  for (const auto& f : fs) rs.ambient += f.ambient;
  std::size_t offset = 0;
  for (const auto& f : fs) {
    rs.rank += f.rank;
    for (const auto& r : f.roots) {
      std::vector<Int> c(rs.ambient, 0);
      for (std::size_t i = 0; i < f.ambient; ++i) c[offset + i] = r[i] * (scale / f.scale);
      rs.roots.emplace_back(c);
    }
    offset += f.ambient;
  }
  std::sort(rs.roots.begin(), rs.roots.end());
  return rs;
}

Rational dot(const Weight& a, const Weight& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += Rational(a[i]) * Rational(b[i]);
  return s;
}

}  // namespace

std::vector<Weight> RootSystem::positive_classes() const {
  std::vector<Weight> out;
  for (const auto& r : roots)
    if (canonicalize(r).rep() == r) out.push_back(r);
  return out;
}

bool RootSystem::contains(const Weight& w) const { return std::binary_search(roots.begin(), roots.end(), w); }

RootSystem RootSystem::rescaled(int factor) const {
  RootSystem rs = *this;
  rs.scale *= factor;
  for (auto& r : rs.roots) r = static_cast<Int>(factor) * r;
  std::sort(rs.roots.begin(), rs.roots.end());
  return rs;
}

RootSystem root_system(const std::string& name) {
  if (name.empty()) fail("empty root system name");
  std::vector<RootSystem> fs;
  std::size_t start = 0;
  while (true) {
    const std::size_t x = name.find('x', start);
    fs.push_back(parse_factor(name.substr(start, x == std::string::npos ? std::string::npos : x - start)));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  if (fs.size() == 1) return fs.front();
  for (const auto& f : fs)
    if (f.name == "T") fail("bare T cannot be part of a product");
  return product(fs, name);
}

WeylElement::WeylElement(std::size_t n) : n_(n), m_(n * n, Rational(0)) {
  for (std::size_t i = 0; i < n; ++i) m_[i * n + i] = 1;
}

WeylElement WeylElement::reflection(const Weight& alpha) {
  if (alpha.is_zero()) throw PreconditionError("reflection in the zero vector");
  const std::size_t n = alpha.rank();
  WeylElement s(n);
  const Rational f = Rational(2) / dot(alpha, alpha);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.m_[i * n + j] -= f * Rational(alpha[i]) * Rational(alpha[j]);
  return s;
}

WeylElement reflection(const Weight& alpha) { return WeylElement::reflection(alpha); }

std::vector<Rational> WeylElement::apply(const std::vector<Rational>& x) const {
  if (x.size() != n_) throw PreconditionError("dimension mismatch");
  std::vector<Rational> y(n_, Rational(0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (m_[i * n_ + j] != 0) y[i] += m_[i * n_ + j] * x[j];
  return y;
}

Weight WeylElement::apply(const Weight& w) const {
  std::vector<Rational> x(w.coords().begin(), w.coords().end());
  const auto y = apply(x);
  std::vector<Int> c;
  c.reserve(n_);
  for (const auto& q : y) {
    if (!is_integer(q)) fail("Weyl image of " + w.str() + " is not integral");
    c.push_back(boost::multiprecision::numerator(q).convert_to<Int>());
  }
  return Weight(c);
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.n_ != b.n_) throw PreconditionError("dimension mismatch");
  const std::size_t n = a.n_;
  WeylElement c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& x = a.m_[i * n + k];
        if (x != 0) s += x * b.m_[k * n + j];
      }
      c.m_[i * n + j] = s;
    }
  }
  return c;
}

std::size_t weyl_bound() {
  if (const char* env = std::getenv("GKM_MAX_WEYL")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    fail(std::string("GKM_MAX_WEYL must be a positive integer, got '") + env + "'");
  }
  return 10000;
}

std::vector<WeylElement> weyl_group(const RootSystem& rs, std::size_t bound) {
  std::vector<WeylElement> gens;
  for (const auto& r : rs.positive_classes()) gens.push_back(reflection(r));
  std::vector<WeylElement> out{WeylElement(rs.ambient)};
  std::set<WeylElement> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& s : gens) {
      WeylElement h = out[i] * s;
      if (seen.count(h)) continue;
      if (out.size() >= bound)
        fail("Weyl group of " + rs.name + " exceeds the bound of " + std::to_string(bound) + " elements");
      seen.insert(h);
      out.push_back(std::move(h));
    }
  }
  return out;
}

RootSystemPair make_pair(const RootSystem& g, const RootSystem& k_in) {
  RootSystem k = k_in;
  if (k.roots.empty()) {
    if (k.name != "T" && k.rank != g.rank)
      fail("unequal rank: " + g.name + " has rank " + std::to_string(g.rank) + ", " + k.name + " has rank " +
           std::to_string(k.rank));
    k.ambient = g.ambient;
    k.rank = g.rank;
    k.scale = g.scale;
    if (k.name == "T") k.name = "T" + std::to_string(g.rank);
  } else if (k.scale != g.scale) {
    if (g.scale % k.scale != 0) fail("incompatible root scales");
    k = k.rescaled(g.scale / k.scale);
  }
  if (k.ambient != g.ambient)
    fail("ambient dimension mismatch between " + g.name + " and " + k.name);
  if (k.rank != g.rank) fail("unequal rank: " + g.name + " and " + k.name);
  for (const auto& r : k.roots)
    if (!g.contains(r)) fail("root " + r.str() + " of " + k.name + " is not a root of " + g.name);
  return {g, k};
}

RootSystemPair make_pair(const std::string& g, const std::string& k) {
  return make_pair(root_system(g), root_system(k));
}

GKMGraph homogeneous_gkm(const RootSystemPair& pair) {
  const RootSystem& G = pair.g;
  const RootSystem& K = pair.k;
  const auto wg = weyl_group(G);
  const auto wk = weyl_group(K);
  std::map<WeylElement, std::size_t> index;
  for (std::size_t i = 0; i < wg.size(); ++i) index.emplace(wg[i], i);
  auto lookup = [&](const WeylElement& w) {
    auto it = index.find(w);
    if (it == index.end()) fail("Weyl group of " + K.name + " is not contained in that of " + G.name);
    return it->second;
  };

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(wg.size(), none);
  std::vector<std::vector<std::size_t>> cosets;
  for (std::size_t i = 0; i < wg.size(); ++i) {
    if (coset_of[i] != none) continue;
    cosets.emplace_back();
    for (const auto& k : wk) {
      const std::size_t j = lookup(wg[i] * k);
      if (coset_of[j] != none && coset_of[j] != cosets.size() - 1) fail("coset partition failed");
      if (coset_of[j] == none) cosets.back().push_back(j);
      coset_of[j] = cosets.size() - 1;
    }
  }

  std::vector<Weight> complement;
  for (const auto& r : G.positive_classes())
    if (!K.contains(r)) complement.push_back(r);
  std::vector<WeylElement> refl;
  for (const auto& b : complement) refl.push_back(reflection(b));

  // Half-edges out of each coset, keyed by target coset, as sorted weight lists.
  using HalfEdges = std::map<std::size_t, std::vector<WeightClass>>;
  auto half_edges = [&](std::size_t w, std::size_t from) {
    HalfEdges h;
    for (std::size_t b = 0; b < complement.size(); ++b) {
      const std::size_t to = coset_of[lookup(wg[w] * refl[b])];
      if (to == from) fail("reflection in a complementary root fixes a coset");
      h[to].push_back(canonicalize(wg[w].apply(complement[b])));
    }
    for (auto& [to, ws] : h) std::sort(ws.begin(), ws.end());
    return h;
  };
  std::vector<HalfEdges> out(cosets.size());
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    out[c] = half_edges(cosets[c].front(), c);
    for (std::size_t i = 1; i < cosets[c].size(); ++i)
      if (half_edges(cosets[c][i], c) != out[c]) fail("edge data depends on the coset representative");
  }

  GraphBuilder b(static_cast<int>(G.ambient), static_cast<int>(complement.size()));
  for (std::size_t c = 0; c < cosets.size(); ++c) b.add_vertex("v" + std::to_string(c));
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    for (const auto& [to, ws] : out[c]) {
      auto back = out[to].find(c);
      if (back == out[to].end() || back->second != ws) fail("edge relation between cosets is not symmetric");
      if (to < c) continue;
      for (const auto& w : ws) b.add_edge(c, to, w.rep());
    }
  }
  b.scale(G.scale);
  return b.build();
}

}  // namespace gkm
