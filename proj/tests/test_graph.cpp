#include <catch_amalgamated.hpp>

#include <set>

#include "gkm/catalog.hpp"
#include "gkm/error.hpp"
#include "gkm/graph.hpp"
#include "support.hpp"

using namespace gkm;

namespace {

bool in_plane(const Weight& w, const Weight& a, const Weight& b) {
  oracle::Matrix m{{a.coords().begin(), a.coords().end()},
                   {b.coords().begin(), b.coords().end()},
                   {w.coords().begin(), w.coords().end()}};
  return oracle::rank(m) == 2;
}

/// Edge sets of faces: connected components, containing the starting pair,
/// of the edges whose weights lie in the plane of the pair.
std::set<std::vector<EdgeIndex>> reference_faces(const GKMGraph& g) {
  std::set<std::vector<EdgeIndex>> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const Weight& a = g.weight(inc[i]).rep();
        const Weight& b = g.weight(inc[j]).rep();
        std::set<EdgeIndex> face{inc[i], inc[j]};
        std::set<VertexIndex> reached{v, g.edge(inc[i]).other(v), g.edge(inc[j]).other(v)};
        bool grew = true;
        while (grew) {
          grew = false;
          for (EdgeIndex e = 0; e < g.edges().size(); ++e) {
            if (face.count(e) || !in_plane(g.weight(e).rep(), a, b)) continue;
            if (reached.count(g.edge(e).u) || reached.count(g.edge(e).v)) {
              face.insert(e);
              reached.insert(g.edge(e).u);
              reached.insert(g.edge(e).v);
              grew = true;
            }
          }
        }
        out.insert({face.begin(), face.end()});
      }
  }
  return out;
}

}  // namespace

TEST_CASE("builder assigns parallel indices and canonical weights") {
  GraphBuilder b(2, 2);
  const auto u = b.add_vertex("u"), v = b.add_vertex("v");
  b.add_edge(u, v, {-1, 0}).add_edge(v, u, {0, 1});
  const GKMGraph g = b.build();
  REQUIRE(g.edges().size() == 2);
  CHECK(g.edge(0).index == 0);
  CHECK(g.edge(1).index == 1);
  CHECK(g.weight(0).rep() == Weight{1, 0});
  CHECK(g.bundle(0, 1).size() == 2);
  CHECK(g.degree(0) == 2);
  CHECK(g.labeled());
}

TEST_CASE("structural errors") {
  const auto w = canonicalize({1, 0});
  CHECK_THROWS_AS(GKMGraph(2, 1, {"a", "a"}, {}), StructuralError);
  CHECK_THROWS_AS(GKMGraph(2, 1, {"a"}, {Edge{0, 0, w, 0}}), StructuralError);
  CHECK_THROWS_AS(GKMGraph(2, 1, {"a", "b"}, {Edge{0, 2, w, 0}}), StructuralError);
  CHECK_THROWS_AS(GKMGraph(2, 1, {"a", "b"}, {Edge{0, 1, w, 0}, Edge{1, 0, w, 0}}), StructuralError);
  CHECK_THROWS_AS(GKMGraph(3, 1, {"a", "b"}, {Edge{0, 1, w, 0}}), StructuralError);
  CHECK_THROWS_AS(GKMGraph(0, 1, {"a"}, {}), StructuralError);
  CHECK_THROWS_AS(GKMGraph(2, 1, {"a"}, {}, true, {StarEdge{0, w}}), StructuralError);
  CHECK_NOTHROW(GKMGraph(2, 1, {"a"}, {}, false, {StarEdge{0, w}}));
}

TEST_CASE("validate checks degree and independence") {
  const GKMGraph s6 = build_sphere(standard_sphere_weights(3));
  CHECK(validate(s6, 3).pass);
  CHECK(validate(s6, 2).pass);
  CHECK_THROWS_AS(validate(s6, 1), PreconditionError);

  GraphBuilder b(2, 3);
  b.add_vertex("a");
  b.add_vertex("b");
  b.add_edge(0, 1, {1, 0}).add_edge(0, 1, {0, 1}).add_edge(0, 1, {1, 1});
  const GKMGraph flat = b.build();
  const auto rep = validate(flat, 3);
  CHECK_FALSE(rep.pass);
  CHECK(rep.failing().size() == 2);
  CHECK(validate(flat, 2).pass);

  GraphBuilder wrong(3, 4);
  wrong.add_vertex("a");
  wrong.add_vertex("b");
  wrong.add_edge(0, 1, {1, 0, 0});
  CHECK_THROWS_AS(validate(wrong.build(), 2), StructuralError);

  CHECK_THROWS_AS(validate(build_k33_family(1, false), 2), PreconditionError);
}

TEST_CASE("face counts of the standard graphs") {
  CHECK(all_faces(build_sphere(standard_sphere_weights(3))).size() == 3);
  CHECK(all_faces(build_cp(standard_cp_weights(3))).size() == 4);
  CHECK(all_faces(build_hp(standard_hp_weights(2))).size() == 7);
  // 3 * C(4,2) biangles plus 16 triangles.
  const auto op2 = all_faces(build_op2());
  CHECK(op2.size() == 34);
  CHECK(std::count_if(op2.begin(), op2.end(), [](const Face& f) { return f.is_biangle(); }) == 18);
}

TEST_CASE("faces agree with the reference closure") {
  for (const GKMGraph& g : {build_sphere(standard_sphere_weights(4)), build_cp(standard_cp_weights(3)),
                            build_hp(standard_hp_weights(3)), build_op2()}) {
    std::set<std::vector<EdgeIndex>> got;
    for (const auto& f : all_faces(g)) {
      got.insert(f.edges);
      CHECK(f.closed(g));
      CHECK(f.size() <= 3);
    }
    CHECK(got == reference_faces(g));
  }
}

TEST_CASE("faces need 3-independence") {
  GraphBuilder b(2, 3);
  b.add_vertex("a");
  b.add_vertex("b");
  b.add_edge(0, 1, {1, 0}).add_edge(0, 1, {0, 1}).add_edge(0, 1, {1, 1});
  const GKMGraph g = b.build();
  CHECK_THROWS_AS(face_of(g, 0, 0, 1), PreconditionError);
  CHECK_THROWS_AS(all_faces(g), PreconditionError);
}

TEST_CASE("vertex relabeling") {
  const GKMGraph g = build_cp(standard_cp_weights(2));
  const GKMGraph r = relabel_vertices(g, {2, 0, 1}, {"x", "y", "z"});
  CHECK(r.vertex_id(2) == "x");
  CHECK(r.bundle(2, 0).size() == 1);
  CHECK(r.weight(r.bundle(2, 0).front()) == g.weight(g.bundle(0, 1).front()));
  CHECK(euler_characteristic(r) == 3);
}
