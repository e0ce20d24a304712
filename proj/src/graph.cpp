#include "gkm/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "gkm/error.hpp"

namespace gkm {

GKMGraph::GKMGraph(int rank, int half_dim, std::vector<std::string> vertices, std::vector<Edge> edges,
                   bool orientable, std::vector<StarEdge> star_edges, int scale)
    : rank_(rank),
      half_dim_(half_dim),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      orientable_(orientable),
      star_edges_(std::move(star_edges)),
      scale_(scale) {
  if (rank_ < 1) throw StructuralError("rank must be positive");
  if (half_dim_ < 0) throw StructuralError("half_dim must be non-negative");
  if (scale_ < 1) throw StructuralError("scale must be positive");
  if (!star_edges_.empty() && orientable_) throw StructuralError("star edges require orientable = false");
  {
    std::set<std::string> seen;
    for (const auto& id : vertices_)
      if (!seen.insert(id).second) throw StructuralError("duplicate vertex id '" + id + "'");
  }
  incident_.assign(vertices_.size(), {});
  std::set<std::tuple<VertexIndex, VertexIndex, int>> keys;
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    Edge& ed = edges_[e];
    std::ostringstream where;
    where << "edge " << e;
    if (ed.u >= vertices_.size() || ed.v >= vertices_.size())
      throw StructuralError(where.str() + ": unknown endpoint");
    if (ed.u == ed.v) throw StructuralError(where.str() + ": loop at '" + vertices_[ed.u] + "'");
    if (ed.weight && ed.weight->rank() != static_cast<std::size_t>(rank_))
      throw StructuralError(where.str() + ": weight " + ed.weight->str() + " has wrong rank");
    if (!keys.emplace(std::min(ed.u, ed.v), std::max(ed.u, ed.v), ed.index).second)
      throw StructuralError(where.str() + ": duplicate parallel-edge index");
    incident_[ed.u].push_back(e);
    incident_[ed.v].push_back(e);
  }
  for (std::size_t i = 0; i < star_edges_.size(); ++i) {
    const StarEdge& s = star_edges_[i];
    if (s.v >= vertices_.size()) throw StructuralError("star edge " + std::to_string(i) + ": unknown vertex");
    if (s.weight.rank() != static_cast<std::size_t>(rank_))
      throw StructuralError("star edge " + std::to_string(i) + ": weight has wrong rank");
  }
}

VertexIndex GKMGraph::vertex_index(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) throw StructuralError("unknown vertex '" + id + "'");
  return static_cast<VertexIndex>(it - vertices_.begin());
}

bool GKMGraph::labeled() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight.has_value(); });
}

void GKMGraph::require_labeled(const char* what) const {
  if (!labeled()) throw PreconditionError(std::string(what) + " requires edge weights");
}

const WeightClass& GKMGraph::weight(EdgeIndex e) const {
  const Edge& ed = edges_.at(e);
  if (!ed.weight) throw PreconditionError("edge " + std::to_string(e) + " has no weight");
  return *ed.weight;
}

std::vector<WeightClass> GKMGraph::weights_at(VertexIndex v) const {
  std::vector<WeightClass> out;
  for (EdgeIndex e : incident_.at(v)) out.push_back(weight(e));
  for (const auto& s : star_edges_)
    if (s.v == v) out.push_back(s.weight);
  return out;
}

std::size_t GKMGraph::degree(VertexIndex v) const {
  std::size_t d = incident_.at(v).size();
  for (const auto& s : star_edges_)
    if (s.v == v) ++d;
  return d;
}

std::vector<EdgeIndex> GKMGraph::bundle(VertexIndex u, VertexIndex v) const {
  std::vector<EdgeIndex> out;
  for (EdgeIndex e : incident_.at(u))
    if (edges_[e].other(u) == v) out.push_back(e);
  return out;
}

VertexIndex GraphBuilder::add_vertex(std::string id) {
  vertices_.push_back(std::move(id));
  return vertices_.size() - 1;
}

int GraphBuilder::next_index(VertexIndex u, VertexIndex v) const {
  int n = 0;
  for (const auto& e : edges_)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) n = std::max(n, e.index + 1);
  return n;
}

GraphBuilder& GraphBuilder::add_edge(VertexIndex u, VertexIndex v, const Weight& w) {
  edges_.push_back(Edge{u, v, canonicalize(w), next_index(u, v)});
  return *this;
}

GraphBuilder& GraphBuilder::add_unlabeled_edge(VertexIndex u, VertexIndex v) {
  edges_.push_back(Edge{u, v, std::nullopt, next_index(u, v)});
  return *this;
}

GraphBuilder& GraphBuilder::add_star(VertexIndex v, const Weight& w) {
  stars_.push_back(StarEdge{v, canonicalize(w)});
  return *this;
}

GKMGraph GraphBuilder::build() const {
  return GKMGraph(rank_, half_dim_, vertices_, edges_, orientable_, stars_, scale_);
}

GKMGraph relabel_vertices(const GKMGraph& g, const std::vector<std::size_t>& perm,
                          const std::vector<std::string>& ids) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n || ids.size() != n) throw PreconditionError("relabel: size mismatch");
  std::vector<std::string> verts(n);
  std::vector<char> hit(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || hit[perm[i]]) throw PreconditionError("relabel: not a permutation");
    hit[perm[i]] = 1;
    verts[perm[i]] = ids[i];
  }
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) {
    e.u = perm[e.u];
    e.v = perm[e.v];
  }
  std::vector<StarEdge> stars = g.star_edges();
  for (auto& s : stars) s.v = perm[s.v];
  return GKMGraph(g.rank(), g.half_dim(), std::move(verts), std::move(edges), g.orientable(), std::move(stars),
                  g.scale());
}

std::vector<VertexIndex> ValidationReport::failing() const {
  std::vector<VertexIndex> out;
  for (const auto& c : vertices)
    if (!c.independent) out.push_back(c.vertex);
  return out;
}

ValidationReport validate(const GKMGraph& g, int k) {
  if (k < 2) throw PreconditionError("k-independence needs k >= 2");
  g.require_labeled("validation");
  std::vector<std::string> bad;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != static_cast<std::size_t>(g.half_dim()))
      bad.push_back(g.vertex_id(v) + " (degree " + std::to_string(g.degree(v)) + ")");
  if (!bad.empty()) {
    std::string msg = "degree mismatch with half_dim " + std::to_string(g.half_dim()) + ":";
    for (const auto& b : bad) msg += " " + b;
    throw StructuralError(msg);
  }
  ValidationReport rep;
  rep.k = k;
  rep.pass = true;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto ws = g.weights_at(v);
    VertexCheck c{v, ws.size(), is_k_independent(ws, k)};
    rep.pass = rep.pass && c.independent;
    rep.vertices.push_back(c);
  }
  return rep;
}

bool Face::closed(const GKMGraph& g) const {
  std::map<VertexIndex, int> deg;
  for (EdgeIndex e : edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return std::all_of(vertices.begin(), vertices.end(), [&](VertexIndex v) { return deg[v] == 2; });
}

namespace {

Face closure(const GKMGraph& g, VertexIndex v, EdgeIndex e1, EdgeIndex e2) {
  const WeightClass& a = g.weight(e1);
  const WeightClass& b = g.weight(e2);
  std::set<VertexIndex> verts{v, g.edge(e1).other(v), g.edge(e2).other(v)};
  std::set<EdgeIndex> edges{e1, e2};
  std::vector<VertexIndex> queue(verts.begin(), verts.end());
  while (!queue.empty()) {
    const VertexIndex x = queue.back();
    queue.pop_back();
    for (EdgeIndex e : g.incident(x)) {
      if (edges.count(e) || !in_span2(g.weight(e), a, b)) continue;
      edges.insert(e);
      const VertexIndex y = g.edge(e).other(x);
      if (verts.insert(y).second) queue.push_back(y);
    }
  }
  return Face{{verts.begin(), verts.end()}, {edges.begin(), edges.end()}, {a, b}};
}

void check_pair(const GKMGraph& g, VertexIndex v, EdgeIndex e1, EdgeIndex e2) {
  if (e1 == e2) throw PreconditionError("face needs two distinct edges");
  if (!g.edge(e1).touches(v) || !g.edge(e2).touches(v))
    throw PreconditionError("face edges must meet at the given vertex");
}

void require_gkm3(const GKMGraph& g) {
  if (!validate(g, 3).pass) throw PreconditionError("faces require 3-independence");
}

}  // namespace

Face face_of(const GKMGraph& g, VertexIndex v, EdgeIndex e1, EdgeIndex e2) {
  check_pair(g, v, e1, e2);
  require_gkm3(g);
  return closure(g, v, e1, e2);
}

std::vector<Face> all_faces(const GKMGraph& g) {
  require_gkm3(g);
  std::vector<Face> faces;
  std::set<std::vector<EdgeIndex>> seen;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        bool covered = false;
        for (const auto& f : faces) {
          if (std::binary_search(f.edges.begin(), f.edges.end(), inc[i]) &&
              std::binary_search(f.edges.begin(), f.edges.end(), inc[j])) {
            covered = true;
            break;
          }
        }
        if (covered) continue;
        Face f = closure(g, v, inc[i], inc[j]);
        if (seen.insert(f.edges).second) faces.push_back(std::move(f));
      }
    }
  }
  return faces;
}

std::size_t euler_characteristic(const GKMGraph& g) { return g.vertex_count(); }

}  // namespace gkm
