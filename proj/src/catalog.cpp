#include "gkm/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include "gkm/error.hpp"
#include "gkm/rootsys.hpp"

namespace gkm {

std::string CrossType::str() const {
  switch (kind) {
    case Kind::Sphere:
      return "S^" + std::to_string(2 * n);
    case Kind::ComplexProjective:
      return "CP^" + std::to_string(n);
    case Kind::QuaternionicProjective:
      return "HP^" + std::to_string(n);
    case Kind::CayleyPlane:
      return "OP^2";
    case Kind::RealProjective:
      return "RP^" + std::to_string(2 * n);
    case Kind::NotRealizable:
      break;
  }
  return "none";
}

int CrossType::dimension() const {
  switch (kind) {
    case Kind::Sphere:
    case Kind::ComplexProjective:
    case Kind::RealProjective:
      return 2 * n;
    case Kind::QuaternionicProjective:
      return 4 * n;
    case Kind::CayleyPlane:
      return 16;
    case Kind::NotRealizable:
      break;
  }
  return 0;
}

bool same_space(const CrossType& a, const CrossType& b) {
  auto canon = [](CrossType t) {
    if (t.kind == CrossType::Kind::ComplexProjective && t.n == 1) return CrossType::sphere(1);
    if (t.kind == CrossType::Kind::QuaternionicProjective && t.n == 1) return CrossType::sphere(2);
    return t;
  };
  return canon(a) == canon(b);
}

Weight NormalizedLabels::numerator(EdgeIndex e) const {
  const auto& c = coefficients.at(e);
  Weight w = Weight::zero(base_weights.front().rank());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) w += c[i] * base_weights[i];
  return w;
}

bool NormalizedLabels::reproduces(const GKMGraph& g) const {
  if (coefficients.size() != g.edges().size() || base_weights.empty()) return false;
  for (EdgeIndex e = 0; e < g.edges().size(); ++e) {
    const Weight num = numerator(e);
    if (num.is_zero() || canonicalize(num) != canonicalize(denominator * g.weight(e).rep())) return false;
  }
  return true;
}

std::string NormalizedLabels::expression(EdgeIndex e, const std::string& symbol) const {
  std::ostringstream os;
  bool first = true;
  std::vector<Int> c = coefficients.at(e);
  Int den = denominator;
  Int g = den;
  for (Int x : c) g = std::gcd(g, x);
  if (g > 1) {
    for (auto& x : c) x /= g;
    den /= g;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const Int mag = c[i] < 0 ? -c[i] : c[i];
    os << (first ? (c[i] < 0 ? "-" : "") : (c[i] < 0 ? " - " : " + "));
    if (mag != 1) os << mag << '*';
    os << symbol << i + first_index;
    first = false;
  }
  if (first) os << '0';
  if (den == 1) return os.str();
  return "(" + os.str() + ")/" + std::to_string(den);
}

namespace {

std::string vid(std::size_t i) { return "v" + std::to_string(i); }

void require_same_rank(const std::vector<Weight>& ws) {
  if (ws.empty()) throw PreconditionError("no weights given");
  for (const auto& w : ws)
    if (w.rank() != ws.front().rank()) throw PreconditionError("weights of different ranks");
}

bool independent(const Weight& a, const Weight& b) {
  const std::array<Weight, 2> ws{a, b};
  return rank_of(ws) == 2;
}

}  // namespace

GKMGraph build_sphere(const std::vector<Weight>& alphas) {
  require_same_rank(alphas);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i].is_zero()) throw PreconditionError("zero weight");
    for (std::size_t j = i + 1; j < alphas.size(); ++j)
      if (!independent(alphas[i], alphas[j]))
        throw PreconditionError("weights " + alphas[i].str() + " and " + alphas[j].str() + " are dependent");
  }
  GraphBuilder b(static_cast<int>(alphas.front().rank()), static_cast<int>(alphas.size()));
  b.add_vertex("v0");
  b.add_vertex("v1");
  for (const auto& a : alphas) b.add_edge(0, 1, a);
  return b.build();
}

GKMGraph build_cp(const std::vector<Weight>& alphas) {
  require_same_rank(alphas);
  const std::size_t n = alphas.size() - 1;
  if (n < 1) throw PreconditionError("CP^n needs at least two weights");
  if (n == 1 && alphas[0] == alphas[1]) throw PreconditionError("alpha_1 must differ from alpha_0");
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j1 = 0; j1 <= n; ++j1)
      for (std::size_t j2 = j1 + 1; j2 <= n; ++j2) {
        if (i == j1 || i == j2) continue;
        if (!independent(alphas[j1] - alphas[i], alphas[j2] - alphas[i]))
          throw PreconditionError("CP hypothesis fails for (i, j1, j2) = (" + std::to_string(i) + ", " +
                                  std::to_string(j1) + ", " + std::to_string(j2) + ")");
      }
  GraphBuilder b(static_cast<int>(alphas.front().rank()), static_cast<int>(n));
  for (std::size_t i = 0; i <= n; ++i) b.add_vertex(vid(i));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) b.add_edge(i, j, alphas[i] - alphas[j]);
  return b.build();
}

GKMGraph build_hp(const std::vector<Weight>& alphas) {
  require_same_rank(alphas);
  const std::size_t n = alphas.size() - 1;
  if (n < 1) throw PreconditionError("HP^n needs at least two weights");
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (!independent(alphas[i] + alphas[j], alphas[i] - alphas[j]))
        throw PreconditionError("HP hypothesis fails for the pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                ")");
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j1 = 0; j1 <= n; ++j1)
      for (std::size_t j2 = j1 + 1; j2 <= n; ++j2) {
        if (i == j1 || i == j2) continue;
        for (Int s : {1, -1})
          for (Int t : {1, -1})
            if (!independent(alphas[j1] + s * alphas[i], alphas[j2] + t * alphas[i]))
              throw PreconditionError("HP hypothesis fails for (i, j1, j2) = (" + std::to_string(i) + ", " +
                                      std::to_string(j1) + ", " + std::to_string(j2) + ")");
      }
  GraphBuilder b(static_cast<int>(alphas.front().rank()), static_cast<int>(2 * n));
  for (std::size_t i = 0; i <= n; ++i) b.add_vertex(vid(i));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      b.add_edge(i, j, alphas[i] - alphas[j]);
      b.add_edge(i, j, alphas[i] + alphas[j]);
    }
  return b.build();
}

GKMGraph build_op2() {
  GraphBuilder b(4, 8);
  for (int i = 0; i < 3; ++i) b.add_vertex(vid(i));
  // v0v1: (-e1 - ei + sum of the other two)/2 for i = 2, 3, 4, and (e1+e2+e3+e4)/2.
  for (std::size_t i = 1; i < 4; ++i) {
    std::vector<Int> c(4, 1);
    c[0] = -1;
    c[i] = -1;
    b.add_edge(0, 1, Weight(c));
  }
  b.add_edge(0, 1, Weight{1, 1, 1, 1});
  // v0v2: (-ei + sum of the others)/2.
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Int> c(4, 1);
    c[i] = -1;
    b.add_edge(0, 2, Weight(c));
  }
  // v1v2: e1..e4.
  for (std::size_t i = 0; i < 4; ++i) b.add_edge(1, 2, 2 * Weight::unit(4, i));
  b.scale(2);
  return b.build();
}

GKMGraph build_k33_family(int mult, bool with_weights) {
  if (mult != 1 && mult != 2 && mult != 4) throw PreconditionError("K33 multiplicity must be 1, 2 or 4");
  if (with_weights) {
    static const std::map<int, std::pair<const char*, const char*>> groups{
        {1, {"A2", "T"}}, {2, {"C3", "C1xC1xC1"}}, {4, {"F4", "D4"}}};
    const auto& [g, k] = groups.at(mult);
    return homogeneous_gkm(make_pair(g, k));
  }
  GraphBuilder b(1, 3 * mult);
  for (int i = 0; i < 3; ++i) b.add_vertex("a" + std::to_string(i));
  for (int i = 0; i < 3; ++i) b.add_vertex("b" + std::to_string(i));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 6; ++j)
      for (int m = 0; m < mult; ++m) b.add_unlabeled_edge(i, j);
  return b.build();
}

std::vector<Weight> standard_sphere_weights(int n) {
  std::vector<Weight> out;
  for (int i = 0; i < n; ++i) out.push_back(Weight::unit(n, i));
  return out;
}

std::vector<Weight> standard_cp_weights(int n) {
  std::vector<Weight> out{Weight::zero(n)};
  for (int i = 0; i < n; ++i) out.push_back(Weight::unit(n, i));
  return out;
}

std::vector<Weight> standard_hp_weights(int n) {
  std::vector<Weight> out;
  for (int i = 0; i <= n; ++i) out.push_back(Weight::unit(n + 1, i));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Checks that g is a complete graph whose bundles all have size mult.
bool complete_with_multiplicity(const GKMGraph& g, std::size_t mult) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edges().size() != mult * n * (n - 1) / 2) return false;
  for (VertexIndex u = 0; u < n; ++u)
    for (VertexIndex v = u + 1; v < n; ++v)
      if (g.bundle(u, v).size() != mult) return false;
  return true;
}

std::vector<Int> unit_coeffs(std::size_t n, std::size_t i, Int s, std::size_t j, Int t) {
  std::vector<Int> c(n, 0);
  c[i] += s;
  c[j] += t;
  return c;
}

bool same_class(const Weight& a, const WeightClass& b) { return !a.is_zero() && canonicalize(a) == b; }

}  // namespace

NormalizedLabels normalize_cp(const GKMGraph& g) {
  const char* err = "not CP-normalizable";
  g.require_labeled("CP normalization");
  if (!complete_with_multiplicity(g, 1)) throw Error(std::string(err) + ": not a complete simple graph");
  const std::size_t n = g.vertex_count() - 1;
  auto w = [&](VertexIndex a, VertexIndex b) -> const WeightClass& { return g.weight(g.bundle(a, b).front()); };
  // gamma_0i with signs s_i, s_1 = +1, chosen so that gamma_1i = +-(gamma_01 - s_i gamma_0i).
  std::vector<Weight> gamma(n + 1, Weight::zero(g.rank()));
  gamma[1] = w(0, 1).rep();
  for (std::size_t i = 2; i <= n; ++i) {
    const Weight& c = w(0, i).rep();
    if (same_class(gamma[1] - c, w(1, i)))
      gamma[i] = c;
    else if (same_class(gamma[1] + c, w(1, i)))
      gamma[i] = -c;
    else
      throw Error(std::string(err) + ": no sign makes the v1" + g.vertex_id(i) + " label a difference");
  }
  NormalizedLabels out;
  out.base_weights = gamma;
  for (VertexIndex v = 0; v <= n; ++v) out.vertex_order.push_back(v);
  for (const auto& e : g.edges()) out.coefficients.push_back(unit_coeffs(n + 1, e.u, 1, e.v, -1));
  if (!out.reproduces(g)) throw Error(std::string(err) + ": some label is not gamma_0i - gamma_0j");
  return out;
}

NormalizedLabels normalize_hp(const GKMGraph& g) {
  const char* err = "not HP-normalizable";
  g.require_labeled("HP normalization");
  if (!complete_with_multiplicity(g, 2)) throw Error(std::string(err) + ": not a complete graph with doubled edges");
  const std::size_t n = g.vertex_count() - 1;
  auto pair_at = [&](VertexIndex a, VertexIndex b) {
    const auto es = g.bundle(a, b);
    return std::pair<Weight, Weight>{g.weight(es[0]).rep(), g.weight(es[1]).rep()};
  };
  const auto [a, b] = pair_at(0, 1);
  for (Int sa : {1, -1}) {
    for (Int sb : {1, -1}) {
      // 2 alpha_0 = gamma_01 + gamma_01'
      const Weight two_a0 = sa * a + sb * b;
      if (two_a0.is_zero()) continue;
      std::vector<Weight> two_alpha{two_a0};
      bool ok = true;
      for (std::size_t j = 1; j <= n && ok; ++j) {
        const auto [c, d] = pair_at(0, j);
        ok = false;
        for (Int sc : {1, -1}) {
          for (Int sd : {1, -1}) {
            if (sc * c + sd * d != two_a0) continue;
            two_alpha.push_back(sc * c - sd * d);
            ok = true;
            break;
          }
          if (ok) break;
        }
      }
      if (!ok) continue;
      NormalizedLabels out;
      out.denominator = 2;
      out.base_weights = two_alpha;
      for (VertexIndex v = 0; v <= n; ++v) out.vertex_order.push_back(v);
      // Match each bundle {alpha_i + alpha_j, alpha_i - alpha_j} to its two edges.
      bool matched = true;
      out.coefficients.assign(g.edges().size(), {});
      for (VertexIndex i = 0; i <= n && matched; ++i)
        for (VertexIndex j = i + 1; j <= n && matched; ++j) {
          const auto es = g.bundle(i, j);
          const Weight plus = two_alpha[i] + two_alpha[j], minus = two_alpha[i] - two_alpha[j];
          const WeightClass& w0 = g.weight(es[0]);
          const WeightClass& w1 = g.weight(es[1]);
          auto fits = [&](const Weight& num, const WeightClass& w) { return same_class(num, canonicalize(2 * w.rep())); };
          if (fits(plus, w0) && fits(minus, w1)) {
            out.coefficients[es[0]] = unit_coeffs(n + 1, i, 1, j, 1);
            out.coefficients[es[1]] = unit_coeffs(n + 1, i, 1, j, -1);
          } else if (fits(minus, w0) && fits(plus, w1)) {
            out.coefficients[es[0]] = unit_coeffs(n + 1, i, 1, j, -1);
            out.coefficients[es[1]] = unit_coeffs(n + 1, i, 1, j, 1);
          } else {
            matched = false;
          }
        }
      if (matched && out.reproduces(g)) return out;
    }
  }
  throw Error(std::string(err) + ": the bundle sums at v0 are not constant for any sign choice");
}

NormalizedLabels normalize_op2(const GKMGraph& g) {
  const char* err = "not OP2-normalizable";
  g.require_labeled("OP2 normalization");
  if (g.vertex_count() != 3 || !complete_with_multiplicity(g, 4))
    throw Error(std::string(err) + ": not a triangle with each edge replaced by four edges");
  auto reps = [&](VertexIndex a, VertexIndex b) {
    std::vector<Weight> out;
    for (EdgeIndex e : g.bundle(a, b)) out.push_back(g.weight(e).rep());
    return out;
  };
  auto classes = [&](VertexIndex a, VertexIndex b) {
    std::vector<WeightClass> out;
    for (EdgeIndex e : g.bundle(a, b)) out.push_back(g.weight(e));
    std::sort(out.begin(), out.end());
    return out;
  };
  auto class_set = [](const std::vector<Weight>& ws, std::vector<WeightClass>& out) {
    out.clear();
    for (const auto& w : ws) {
      if (w.is_zero()) return false;
      out.push_back(canonicalize(w));
    }
    std::sort(out.begin(), out.end());
    return true;
  };

  std::array<VertexIndex, 3> order{0, 1, 2};
  do {
    // alpha: v0v1, beta: v1v2, gamma: v2v0
    const auto A = reps(order[0], order[1]);
    const auto B = reps(order[1], order[2]);
    const auto cls_a = classes(order[0], order[1]);
    const auto cls_c = classes(order[2], order[0]);
    std::array<std::size_t, 4> perm{0, 1, 2, 3};
    do {
      for (int mask = 0; mask < 16; ++mask) {
        std::array<Weight, 4> beta;
        Weight sum = Weight::zero(g.rank());
        for (std::size_t i = 0; i < 4; ++i) {
          beta[i] = ((mask >> i) & 1 ? -1 : 1) * B[perm[i]];
          sum += beta[i];
        }
        for (const auto& a1 : A) {
          // 2 alpha_1 = beta_1 + ... + beta_4 (from adding the second and third relations)
          if (2 * a1 != sum && 2 * a1 != -1 * sum) continue;
          const Weight alpha1 = 2 * a1 == sum ? a1 : -a1;
          std::vector<Weight> gammas, alphas{alpha1};
          for (std::size_t i = 0; i < 4; ++i) gammas.push_back(alpha1 - beta[i]);
          for (std::size_t i = 1; i < 4; ++i) alphas.push_back(gammas[0] - beta[i]);
          std::vector<WeightClass> ga, aa;
          if (!class_set(gammas, ga) || ga != cls_c) continue;
          if (!class_set(alphas, aa) || aa != cls_a) continue;
          // Relations: gamma_1 = alpha_2 + beta_2, gamma_2 = alpha_2 + beta_1,
          // gamma_3 = -alpha_2 + beta_4, gamma_4 = -alpha_2 + beta_3.
          const Weight& a2 = alphas[1];
          if (gammas[0] != a2 + beta[1] || gammas[1] != a2 + beta[0] || gammas[2] != beta[3] - a2 ||
              gammas[3] != beta[2] - a2)
            continue;

          NormalizedLabels out;
          out.denominator = 2;
          out.first_index = 1;
          out.base_weights.assign(beta.begin(), beta.end());
          out.vertex_order.assign(order.begin(), order.end());
          const std::vector<Int> half_sum{1, 1, 1, 1};
          std::vector<std::vector<Int>> ea{half_sum}, eb, ec;
          for (std::size_t i = 0; i < 4; ++i) {
            std::vector<Int> b(4, 0), c = half_sum;
            b[i] = 2;
            c[i] -= 2;
            eb.push_back(b);
            ec.push_back(c);
            if (i > 0) {
              std::vector<Int> a = ec[0];
              a[i] -= 2;
              ea.push_back(a);
            }
          }
          out.coefficients.assign(g.edges().size(), {});
          auto assign = [&](VertexIndex x, VertexIndex y, const std::vector<std::vector<Int>>& exprs) {
            for (EdgeIndex e : g.bundle(x, y)) {
              for (const auto& c : exprs) {
                NormalizedLabels probe = out;
                probe.coefficients[e] = c;
                if (same_class(probe.numerator(e), canonicalize(2 * g.weight(e).rep()))) {
                  out.coefficients[e] = c;
                  break;
                }
              }
            }
          };
          assign(order[0], order[1], ea);
          assign(order[1], order[2], eb);
          assign(order[2], order[0], ec);
          if (out.reproduces(g)) return out;
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::next_permutation(order.begin(), order.end()));
  throw Error(std::string(err) + ": no sign and pairing choice satisfies the four triangle relations");
}

}  // namespace gkm
