#include <catch_amalgamated.hpp>

#include <set>

#include "gkm/classifier.hpp"
#include "gkm/error.hpp"
#include "gkm/rootsys.hpp"

using namespace gkm;

namespace {

/// Complete bipartite on two triples, k parallel edges per pair.
bool is_k33(const GKMGraph& g, std::size_t k) {
  if (g.vertex_count() != 6) return false;
  std::vector<int> side(6, -1);
  side[0] = 0;
  for (VertexIndex v = 1; v < 6; ++v) side[v] = g.bundle(0, v).empty() ? 0 : 1;
  if (std::count(side.begin(), side.end(), 0) != 3) return false;
  for (VertexIndex u = 0; u < 6; ++u)
    for (VertexIndex v = u + 1; v < 6; ++v) {
      const std::size_t want = side[u] == side[v] ? 0 : k;
      if (g.bundle(u, v).size() != want) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("root counts") {
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"A1", 2}, {"A2", 6}, {"A3", 12}, {"B2", 8}, {"B3", 18}, {"C3", 18}, {"D4", 24}, {"F4", 48}, {"C1xC1xC1", 6}, {"T2", 0}};
  for (const auto& [name, count] : expected) {
    const RootSystem rs = root_system(name);
    CHECK(rs.roots.size() == count);
    CHECK(rs.positive_classes().size() == count / 2);
    for (const auto& r : rs.roots) CHECK(rs.contains(-r));
  }
  CHECK(root_system("A2").ambient == 3);
  CHECK(root_system("A2").rank == 2);
  CHECK(root_system("F4").scale == 2);
  CHECK_THROWS_AS(root_system("E8"), Error);
  CHECK_THROWS_AS(root_system("G2"), Error);
  CHECK_THROWS_AS(root_system("Q3"), Error);
}

TEST_CASE("reflections are orthogonal involutions preserving the roots") {
  for (const char* name : {"A3", "B3", "C3", "D4", "F4"}) {
    const RootSystem rs = root_system(name);
    const std::set<Weight> roots(rs.roots.begin(), rs.roots.end());
    for (const auto& a : rs.positive_classes()) {
      const WeylElement s = reflection(a);
      CHECK(s * s == WeylElement(rs.ambient));
      CHECK(s.apply(a) == -a);
      for (const auto& b : rs.roots) CHECK(roots.count(s.apply(b)) == 1);
    }
  }
}

TEST_CASE("Weyl group orders") {
  const std::vector<std::pair<std::string, std::size_t>> orders{
      {"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"B3", 48}, {"C3", 48}, {"D4", 192}, {"C1xC1xC1", 8}, {"T3", 1}};
  for (const auto& [name, order] : orders) CHECK(weyl_group(root_system(name)).size() == order);
  CHECK_THROWS_AS(weyl_group(root_system("B3"), 20), Error);
}

TEST_CASE("homogeneous spaces of equal rank") {
  const GKMGraph op2 = homogeneous_gkm(make_pair("F4", "B4"));
  CHECK(op2.vertex_count() == 3);
  for (VertexIndex u = 0; u < 3; ++u)
    for (VertexIndex v = u + 1; v < 3; ++v) CHECK(op2.bundle(u, v).size() == 4);
  CHECK(classify(op2).cross == CrossType::op2());

  CHECK(is_k33(homogeneous_gkm(make_pair("A2", "T")), 1));
  CHECK(is_k33(homogeneous_gkm(make_pair("C3", "C1xC1xC1")), 2));
  CHECK(is_k33(homogeneous_gkm(make_pair("F4", "D4")), 4));

  CHECK(classify(homogeneous_gkm(make_pair("A3", "A2xT1"))).cross == CrossType::cp(3));
  CHECK(classify(homogeneous_gkm(make_pair("C3", "C1xC2"))).cross == CrossType::hp(2));
  CHECK(classify(homogeneous_gkm(make_pair("B3", "D3"))).cross == CrossType::sphere(3));
}

TEST_CASE("pairs must share rank and contain K's roots") {
  CHECK_THROWS_AS(make_pair("A2", "A1"), Error);
  CHECK_THROWS_AS(make_pair("B3", "C3"), Error);
}
