#include "gkm/classifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gkm/error.hpp"

namespace gkm {

std::vector<EdgeBundle> edge_bundles(const GKMGraph& g) {
  std::vector<EdgeBundle> out;
  for (VertexIndex u = 0; u < g.vertex_count(); ++u)
    for (VertexIndex v = u + 1; v < g.vertex_count(); ++v) {
      auto es = g.bundle(u, v);
      if (!es.empty()) out.push_back({u, v, std::move(es)});
    }
  return out;
}

FaceReport check_face_sizes(const GKMGraph& g) {
  FaceReport rep;
  rep.faces = all_faces(g);
  for (std::size_t i = 0; i < rep.faces.size(); ++i)
    if (rep.faces[i].size() > 3) rep.offending.push_back(i);
  return rep;
}

bool SignSystem::consistent() const {
  for (std::size_t i = 0; i < k; ++i) {
    if (gamma[i] != alpha[0] - beta[i]) return false;
    for (std::size_t j = 0; j < k; ++j)
      if (gamma[i] != static_cast<Int>(eps[i][j]) * alpha[j] + static_cast<Int>(delta[i][j]) * beta[sigma[j][i]])
        return false;
  }
  return true;
}

namespace {

using Perm = std::vector<std::size_t>;

Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = i;
  return c;
}

bool is_permutation(const Perm& p) {
  std::vector<char> hit(p.size(), 0);
  for (auto x : p) {
    if (x >= p.size() || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

bool fixed_point_free_involution(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == i || p[p[i]] != i) return false;
  return true;
}

[[noreturn]] void violation(const std::string& lemma, const std::string& what) { throw LemmaViolation(lemma, what); }

}  // namespace

SignSystem extract_sign_system(const GKMGraph& g, const std::array<VertexIndex, 3>& t) {
  g.require_labeled("sign systems");
  SignSystem s;
  s.triangle = t;
  s.alpha_edges = g.bundle(t[0], t[1]);
  s.beta_edges = g.bundle(t[0], t[2]);
  const auto gamma_bundle = g.bundle(t[1], t[2]);
  const std::size_t k = s.alpha_edges.size();
  if (k == 0 || s.beta_edges.size() != k || gamma_bundle.size() != k)
    violation(lemma::uniform_multiplicity, "triangle bundles are empty or of different sizes");
  s.k = k;
  auto rep = [&](EdgeIndex e) { return g.weight(e).rep(); };

  // gamma_i = alpha_0 - beta_i fixes the signs of the beta and gamma weights.
  s.alpha.assign(k, Weight());
  s.alpha[0] = rep(s.alpha_edges[0]);
  for (EdgeIndex b : s.beta_edges) {
    const Weight& w = rep(b);
    bool found = false;
    for (Int sign : {1, -1}) {
      const Weight beta = sign * w;
      const Weight gamma = s.alpha[0] - beta;
      if (gamma.is_zero()) continue;
      for (EdgeIndex c : gamma_bundle) {
        if (g.weight(c) != canonicalize(gamma)) continue;
        if (std::find(s.gamma_edges.begin(), s.gamma_edges.end(), c) != s.gamma_edges.end())
          violation(lemma::sign_system, "sign system infeasible: two beta weights meet the same gamma edge");
        s.beta.push_back(beta);
        s.gamma.push_back(gamma);
        s.gamma_edges.push_back(c);
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) violation(lemma::sign_system, "sign system infeasible: beta weight " + w.str() + " is not alpha_1 minus a gamma weight");
  }

  s.eps.assign(k, std::vector<int>(k, 0));
  s.delta.assign(k, std::vector<int>(k, 0));
  s.sigma.assign(k, Perm(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    Weight a = rep(s.alpha_edges[j]);
    if (j == 0) a = s.alpha[0];
    for (std::size_t i = 0; i < k; ++i) {
      int hits = 0;
      for (std::size_t b = 0; b < k; ++b) {
        const SignPair sp = signed_sum(s.gamma[i], a, s.beta[b]);
        if (!sp) continue;
        ++hits;
        s.eps[i][j] = sp.a;
        s.delta[i][j] = sp.b;
        s.sigma[j][i] = b;
      }
      if (hits != 1)
        violation(lemma::sign_system, "sign system infeasible: gamma_" + std::to_string(i + 1) + " is not uniquely +-alpha_" +
                                          std::to_string(j + 1) + " +- beta");
    }
    // Choose the sign of alpha_j so that eps[0][j] = +1.
    if (j > 0 && s.eps[0][j] < 0) {
      a = -a;
      for (std::size_t i = 0; i < k; ++i) s.eps[i][j] = -s.eps[i][j];
    }
    s.alpha[j] = a;
  }

  for (std::size_t j = 0; j < k; ++j)
    if (!is_permutation(s.sigma[j]))
      violation(lemma::sign_system, "sigma_" + std::to_string(j + 1) + " is not a permutation");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && !fixed_point_free_involution(compose(inverse(s.sigma[j]), s.sigma[i])))
        violation(lemma::sign_system, "sigma_" + std::to_string(j + 1) + "^-1 sigma_" + std::to_string(i + 1) +
                                          " is not a fixed-point-free involution");
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      if (s.delta[i][j] != 1) violation(lemma::sign_system, "delta is not +1 off the first column");
      if (s.eps[s.sigma[j][i]][j] != s.eps[i][j])
        violation(lemma::sign_system, "eps is not constant on sigma_" + std::to_string(j + 1) + " orbits");
      if (j > 1 && s.eps[s.sigma[j][i]][1] != -s.eps[i][1])
        violation(lemma::sign_system, "eps in the second column does not alternate along sigma_" +
                                          std::to_string(j + 1));
    }
  if (!s.consistent()) violation(lemma::sign_system, "relation check failed");
  return s;
}

int check_multiplicity(const GKMGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3) throw PreconditionError("multiplicity check needs at least three vertices");
  std::set<std::size_t> sizes;
  for (VertexIndex u = 0; u < n; ++u)
    for (VertexIndex v = u + 1; v < n; ++v) {
      const std::size_t s = g.bundle(u, v).size();
      if (s == 0)
        violation(lemma::uniform_multiplicity,
                  "no edge between " + g.vertex_id(u) + " and " + g.vertex_id(v) + ": not a simplex");
      sizes.insert(s);
    }
  if (sizes.size() != 1) violation(lemma::uniform_multiplicity, "bundles have different sizes");
  const int k = static_cast<int>(*sizes.begin());
  if (k != 1 && k != 2 && k != 4)
    violation(lemma::multiplicity_124, "every pair of vertices is joined by " + std::to_string(k) +
                                           " edges; only 1, 2 or 4 are possible");
  if (k == 4 && n > 3)
    violation(lemma::quadruple_triangle, "four edges per pair but " + std::to_string(n) +
                                             " vertices; only a triangle is possible");

  // phi(e1, e2): the third edge of the face spanned by e1 in K_uv and e2 in
  // K_uw. For fixed e2 the map e1 -> phi(e1, e2) must be injective.
  const auto faces = all_faces(g);
  auto face_with = [&](EdgeIndex a, EdgeIndex b) -> const Face& {
    for (const auto& f : faces)
      if (std::binary_search(f.edges.begin(), f.edges.end(), a) && std::binary_search(f.edges.begin(), f.edges.end(), b))
        return f;
    fail("no face contains the given edges");
  };
  for (VertexIndex u = 0; u < n; ++u)
    for (VertexIndex v = 0; v < n; ++v)
      for (VertexIndex w = v + 1; w < n; ++w) {
        if (u == v || u == w) continue;
        const auto kuv = g.bundle(u, v), kuw = g.bundle(u, w);
        for (EdgeIndex f2 : kuw) {
          std::set<EdgeIndex> images;
          for (EdgeIndex f1 : kuv) {
            const Face& f = face_with(f1, f2);
            if (!f.is_triangle() || !f.closed(g) || f.edges.size() != 3)
              violation(lemma::uniform_multiplicity, "edges at " + g.vertex_id(u) + " towards " + g.vertex_id(v) +
                                                         " and " + g.vertex_id(w) + " do not span a closed triangle");
            EdgeIndex third = f.edges[0];
            for (EdgeIndex e : f.edges)
              if (e != f1 && e != f2) third = e;
            if (!images.insert(third).second)
              violation(lemma::uniform_multiplicity, "two triangles at " + g.vertex_id(u) + " share their third edge");
          }
        }
      }
  return k;
}

std::string ClassificationResult::violated() const {
  for (const auto& t : trace)
    if (!t.passed) return t.lemma;
  return {};
}

ClassificationResult classify(const GKMGraph& g, const ClassifyFlags& flags) {
  g.require_labeled("classification");
  ClassificationResult res;
  auto pass = [&](const char* lemma, std::string detail) { res.trace.push_back({lemma, true, std::move(detail)}); };
  auto reject = [&](const std::string& lemma, std::string detail) {
    res.trace.push_back({lemma, false, std::move(detail)});
    res.cross = CrossType::none();
    res.normalization.reset();
    return res;
  };
  const std::size_t n = g.vertex_count();

  if (flags.non_orientable || !g.orientable()) {
    if (n != 1) return reject(lemma::single_vertex, "non-orientable graph with " + std::to_string(n) + " vertices");
    pass(lemma::single_vertex, "single vertex");
    res.cross = CrossType::rp(g.half_dim());
    return res;
  }

  const int k_req = flags.gkm4 ? 4 : 3;
  try {
    const auto rep = validate(g, k_req);
    if (!rep.pass) {
      std::string where;
      for (auto v : rep.failing()) where += " " + g.vertex_id(v);
      return reject(lemma::k_independence, "weights are not " + std::to_string(k_req) + "-independent at" + where);
    }
  } catch (const StructuralError& e) {
    return reject(lemma::k_independence, e.what());
  }
  pass(lemma::k_independence, std::to_string(k_req) + "-independent at every vertex");

  const FaceReport faces = check_face_sizes(g);
  if (!faces.pass())
    return reject(lemma::face_size, "a face has " + std::to_string(faces.faces[faces.offending.front()].size()) +
                                        " vertices");
  pass(lemma::face_size, std::to_string(faces.faces.size()) + " faces, none larger than a triangle");

  if (flags.almost_complex) {
    const auto biangles = std::count_if(faces.faces.begin(), faces.faces.end(), [](const Face& f) { return f.is_biangle(); });
    if (biangles > 0) return reject(lemma::no_biangle, std::to_string(biangles) + " biangle faces");
    pass(lemma::no_biangle, "no biangle faces");
  }

  if (n == 1) return reject(lemma::empty_graph, "single vertex in an orientable graph");

  if (n == 2) {
    const int m = static_cast<int>(g.edges().size());
    res.cross = flags.almost_complex ? CrossType::cp(1) : CrossType::sphere(m);
    if (flags.gkm4) pass(lemma::gkm4_sphere_or_cp, "two vertices");
    return res;
  }

  int k = 0;
  try {
    k = check_multiplicity(g);
  } catch (const LemmaViolation& e) {
    return reject(e.lemma(), e.what());
  }
  pass(lemma::uniform_multiplicity, "simplex with " + std::to_string(k) + " edges per pair");
  pass(lemma::multiplicity_124, "k = " + std::to_string(k));
  if (k == 4) pass(lemma::quadruple_triangle, "three vertices");
  if (flags.gkm4) {
    if (k != 1) return reject(lemma::gkm4_sphere_or_cp, "parallel edges between three or more vertices");
    pass(lemma::gkm4_sphere_or_cp, "simple complete graph");
  }
  if (flags.almost_complex && k != 1) return reject(lemma::no_biangle, "parallel edges form biangles");

  if (k > 1) {
    std::size_t count = 0;
    try {
      for (VertexIndex a = 0; a < n; ++a)
        for (VertexIndex b = a + 1; b < n; ++b)
          for (VertexIndex c = b + 1; c < n; ++c, ++count) extract_sign_system(g, {a, b, c});
    } catch (const LemmaViolation& e) {
      return reject(lemma::sign_system, e.what());
    }
    pass(lemma::sign_system, "consistent on " + std::to_string(count) + (count == 1 ? " triangle" : " triangles"));
  }

  const int dim = static_cast<int>(n) - 1;
  try {
    switch (k) {
      case 1:
        res.normalization = normalize_cp(g);
        res.cross = CrossType::cp(dim);
        pass(lemma::cp_labels, "gamma_ij = gamma_0i - gamma_0j");
        break;
      case 2:
        res.normalization = normalize_hp(g);
        res.cross = CrossType::hp(dim);
        pass(lemma::hp_labels, "bundles are alpha_i +- alpha_j");
        break;
      default:
        res.normalization = normalize_op2(g);
        res.cross = CrossType::op2();
        pass(lemma::op2_labels, "alpha_1 = (beta_1 + beta_2 + beta_3 + beta_4)/2");
        break;
    }
  } catch (const Error& e) {
    return reject(k == 1 ? lemma::cp_labels : k == 2 ? lemma::hp_labels : lemma::op2_labels, e.what());
  }
  return res;
}

// ---------------------------------------------------------------------------
// Exhaustive sign-system search

namespace {

std::vector<Perm> fixed_point_free_involutions(std::size_t k) {
  std::vector<Perm> out;
  if (k % 2) return out;
  Perm p(k, k);
  auto pair_up = [&](auto& self) -> void {
    std::size_t first = 0;
    while (first < k && p[first] != k) ++first;
    if (first == k) {
      out.push_back(p);
      return;
    }
    for (std::size_t second = first + 1; second < k; ++second) {
      if (p[second] != k) continue;
      p[first] = second;
      p[second] = first;
      self(self);
      p[first] = p[second] = k;
    }
  };
  pair_up(pair_up);
  return out;
}

struct Search {
  std::size_t k;
  std::uint64_t budget;
  ExclusionReport& report;
  std::vector<Perm> involutions;
  std::vector<Perm> sigma;
  std::vector<std::vector<int>> eps, delta;  // [i][j]

  bool spend() {
    if (++report.nodes > budget) {
      report.complete = false;
      return false;
    }
    return true;
  }

  void permutations() {
    if (sigma.size() == k) {
      eps.assign(k, std::vector<int>(k, 0));
      delta.assign(k, std::vector<int>(k, 0));
      for (std::size_t i = 0; i < k; ++i) {
        eps[i][0] = 1;
        delta[i][0] = -1;
      }
      signs(1);
      return;
    }
    // sigma_j^-1 sigma_i must be a fixed-point-free involution for every i < j;
    // with sigma_0 = id this forces sigma_j itself to be one.
    for (const Perm& p : involutions) {
      if (!report.complete || !spend()) return;
      bool ok = true;
      for (const Perm& q : sigma)
        if (!fixed_point_free_involution(compose(inverse(p), q))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      sigma.push_back(p);
      permutations();
      sigma.pop_back();
    }
  }

  // Column j > 0 must have delta = +1 and eps constant on the orbits of
  // sigma_j, so only those columns are generated; the remaining rules are
  // checked here.
  bool column_ok(std::size_t j) const {
    if (j == 1)
      for (std::size_t jj = 2; jj < k; ++jj)
        for (std::size_t i = 0; i < k; ++i)
          if (eps[sigma[jj][i]][1] != -eps[i][1]) return false;
    // eps_Bi eps_Aj = eps_Ai eps_Bj with B = sigma_j^-1 sigma_i (A), for every earlier column i.
    for (std::size_t i = 0; i < j; ++i) {
      const Perm t = compose(inverse(sigma[j]), sigma[i]);
      for (std::size_t a = 0; a < k; ++a) {
        const std::size_t b = t[a];
        if (eps[b][i] * eps[a][j] != eps[a][i] * eps[b][j]) return false;
      }
    }
    return true;
  }

  void signs(std::size_t j) {
    if (j == k) {
      report.survivors.push_back({sigma, eps, delta});
      return;
    }
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < k; ++i)
      if (i < sigma[j][i]) reps.push_back(i);
    for (std::size_t i = 0; i < k; ++i) delta[i][j] = 1;
    const std::uint64_t patterns = std::uint64_t{1} << reps.size();
    for (std::uint64_t em = 0; em < patterns; ++em) {
      if (!report.complete || !spend()) return;
      for (std::size_t r = 0; r < reps.size(); ++r)
        eps[reps[r]][j] = eps[sigma[j][reps[r]]][j] = (em >> r) & 1 ? -1 : 1;
      if (column_ok(j)) signs(j + 1);
    }
    for (std::size_t i = 0; i < k; ++i) eps[i][j] = delta[i][j] = 0;
  }
};

}  // namespace

ExclusionReport brute_force_k_exclusion(int k, std::uint64_t node_budget) {
  if (k < 1 || k > 12) throw PreconditionError("bundle size must be between 1 and 12");
  ExclusionReport report;
  report.k = k;
  Search s{static_cast<std::size_t>(k), node_budget, report, fixed_point_free_involutions(k), {}, {}, {}};
  Perm id(k);
  std::iota(id.begin(), id.end(), 0);
  s.sigma.push_back(id);
  if (s.spend()) s.permutations();
  return report;
}

bool ExclusionReport::all_klein_transitive() const {
  for (const auto& c : survivors) {
    std::set<Perm> group;
    std::vector<Perm> queue{c.sigma.front()};
    group.insert(c.sigma.front());
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& g : c.sigma) {
        Perm h = compose(queue[i], g);
        if (group.insert(h).second) queue.push_back(h);
      }
    if (group.size() != 4 || c.sigma.front().size() != 4) return false;
    std::set<std::size_t> orbit;
    for (const auto& p : group) {
      if (!(compose(p, p) == c.sigma.front())) return false;
      orbit.insert(p[0]);
    }
    if (orbit.size() != 4) return false;
  }
  return true;
}

bool matches_survivor(const SignSystem& s, const ExclusionReport& report) {
  for (const auto& c : report.survivors)
    if (c.sigma == s.sigma && c.eps == s.eps) return true;
  return false;
}

}  // namespace gkm
