#pragma once

// GKM graphs: one vertex per fixed point, one edge per invariant two-sphere,
// each edge labeled by the isotropy weight of that sphere.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkm/lattice.hpp"

namespace gkm {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
  VertexIndex u = 0;
  VertexIndex v = 0;
  /// Empty for shape-only graphs.
  std::optional<WeightClass> weight;
  /// Distinguishes parallel edges between the same pair of vertices.
  int index = 0;

  VertexIndex other(VertexIndex w) const { return w == u ? v : u; }
  bool touches(VertexIndex w) const { return u == w || v == w; }
  bool operator==(const Edge&) const = default;
};

/// Marker for an RP^2 in the one-skeleton of a non-orientable action: it
/// hangs off the unique fixed point of that RP^2.
struct StarEdge {
  VertexIndex v = 0;
  WeightClass weight;
  bool operator==(const StarEdge&) const = default;
};

class GKMGraph {
 public:
  /// Checks the hard invariants (known endpoints, no loops, nonzero weights of
  /// the right rank, unique parallel-edge indices, stars only when
  /// non-orientable) and throws StructuralError otherwise. Degree regularity
  /// is left to validate() so that malformed inputs can be reported.
  GKMGraph(int rank, int half_dim, std::vector<std::string> vertices, std::vector<Edge> edges,
           bool orientable = true, std::vector<StarEdge> star_edges = {}, int scale = 1);

  int rank() const { return rank_; }
  int half_dim() const { return half_dim_; }
  bool orientable() const { return orientable_; }
  /// Common factor applied to all stored weights (2 for the Cayley plane,
  /// whose half-integral weights are stored doubled).
  int scale() const { return scale_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<StarEdge>& star_edges() const { return star_edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  VertexIndex vertex_index(const std::string& id) const;
  const std::string& vertex_id(VertexIndex v) const { return vertices_.at(v); }

  bool labeled() const;
  /// Throws PreconditionError for shape-only graphs.
  void require_labeled(const char* what) const;
  const WeightClass& weight(EdgeIndex e) const;

  /// Ordinary edges at v, in edge order.
  const std::vector<EdgeIndex>& incident(VertexIndex v) const { return incident_.at(v); }
  /// Ordinary edge weights followed by star-edge weights at v.
  std::vector<WeightClass> weights_at(VertexIndex v) const;
  /// Ordinary plus star degree.
  std::size_t degree(VertexIndex v) const;
  /// Edges joining u and v (the bundle between them).
  std::vector<EdgeIndex> bundle(VertexIndex u, VertexIndex v) const;

  bool operator==(const GKMGraph&) const = default;

 private:
  int rank_;
  int half_dim_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  bool orientable_;
  std::vector<StarEdge> star_edges_;
  int scale_;
  std::vector<std::vector<EdgeIndex>> incident_;
};

/// Incremental construction with automatic parallel-edge indices.
class GraphBuilder {
 public:
  GraphBuilder(int rank, int half_dim) : rank_(rank), half_dim_(half_dim) {}

  VertexIndex add_vertex(std::string id);
  GraphBuilder& add_edge(VertexIndex u, VertexIndex v, const Weight& w);
  GraphBuilder& add_unlabeled_edge(VertexIndex u, VertexIndex v);
  GraphBuilder& add_star(VertexIndex v, const Weight& w);
  GraphBuilder& non_orientable() {
    orientable_ = false;
    return *this;
  }
  GraphBuilder& scale(int s) {
    scale_ = s;
    return *this;
  }
  GKMGraph build() const;

 private:
  int next_index(VertexIndex u, VertexIndex v) const;

  int rank_;
  int half_dim_;
  bool orientable_ = true;
  int scale_ = 1;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<StarEdge> stars_;
};

/// Same graph with vertex i moved to position perm[i] and renamed ids[i].
GKMGraph relabel_vertices(const GKMGraph& g, const std::vector<std::size_t>& perm,
                          const std::vector<std::string>& ids);

// ---------------------------------------------------------------------------
// Validation

struct VertexCheck {
  VertexIndex vertex = 0;
  std::size_t degree = 0;
  bool independent = false;
};

struct ValidationReport {
  int k = 2;
  std::vector<VertexCheck> vertices;
  bool pass = false;

  std::vector<VertexIndex> failing() const;
};

/// GKM_k check: at every vertex any k of the incident weights (star edges
/// included) are linearly independent. Throws StructuralError on degree
/// mismatch with half_dim, PreconditionError for k < 2 or an unlabeled graph.
ValidationReport validate(const GKMGraph& g, int k);

// ---------------------------------------------------------------------------
// Two-dimensional faces

struct Face {
  std::vector<VertexIndex> vertices;  // sorted
  std::vector<EdgeIndex> edges;       // sorted
  std::pair<WeightClass, WeightClass> plane;

  std::size_t size() const { return vertices.size(); }
  bool is_biangle() const { return vertices.size() == 2; }
  bool is_triangle() const { return vertices.size() == 3; }
  /// Every face vertex meets exactly two face edges of g.
  bool closed(const GKMGraph& g) const;
  bool operator==(const Face& o) const { return edges == o.edges; }
};

/// The face through the incident pair (e1, e2) at v: the connected closure of
/// {e1, e2} under edges whose weight lies in the plane of e1 and e2. Requires
/// a GKM_3 graph; throws PreconditionError("faces require 3-independence").
Face face_of(const GKMGraph& g, VertexIndex v, EdgeIndex e1, EdgeIndex e2);

/// All distinct faces, in order of first discovery over (vertex, pair).
std::vector<Face> all_faces(const GKMGraph& g);

/// Number of fixed points, i.e. vertices.
std::size_t euler_characteristic(const GKMGraph& g);

}  // namespace gkm
