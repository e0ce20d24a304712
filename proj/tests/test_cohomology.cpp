#include <catch_amalgamated.hpp>

#include <random>

#include "gkm/catalog.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/error.hpp"
#include "gkm/rootsys.hpp"
#include "support.hpp"

using namespace gkm;
using B = std::vector<std::int64_t>;

namespace {

/// Class with value w_v^power at vertex v, w_v given per vertex.
EquivariantClass power_class(const GKMGraph& g, const std::vector<Weight>& w, int power) {
  return oracle::make_class(g, [&](VertexIndex v) {
    Polynomial p = Polynomial::constant(static_cast<std::size_t>(g.rank()), 1);
    for (int i = 0; i < power; ++i) p = p * Polynomial::linear(w[v]);
    return p;
  });
}

}  // namespace

TEST_CASE("Betti numbers of the standard graphs") {
  CHECK(betti_numbers(build_sphere(standard_sphere_weights(1)), 1) == B{1, 1});
  CHECK(betti_numbers(build_sphere(standard_sphere_weights(3)), 3) == B{1, 0, 0, 1});
  for (int n = 1; n <= 3; ++n) CHECK(betti_numbers(build_cp(standard_cp_weights(n)), n) == B(n + 1, 1));
  CHECK(betti_numbers(build_hp(standard_hp_weights(1)), 2) == B{1, 0, 1});
  CHECK(betti_numbers(build_hp(standard_hp_weights(2)), 4) == B{1, 0, 1, 0, 1});
  CHECK(betti_numbers(build_op2(), 8) == B{1, 0, 0, 0, 1, 0, 0, 0, 1});
  // SU(3)/T^2 and Sp(3)/Sp(1)^3.
  CHECK(betti_numbers(homogeneous_gkm(make_pair("A2", "T")), 3) == B{1, 2, 2, 1});
  CHECK(betti_numbers(homogeneous_gkm(make_pair("C3", "C1xC1xC1")), 6) == B{1, 0, 2, 0, 2, 0, 1});
  // Past the top degree everything vanishes.
  CHECK(betti_numbers(build_cp(standard_cp_weights(2)), 5) == B{1, 1, 1, 0, 0, 0});
}

TEST_CASE("equivariant dimensions agree with the divisibility formulation") {
  const std::vector<std::pair<GKMGraph, int>> cases{
      {build_sphere(standard_sphere_weights(2)), 3}, {build_cp(standard_cp_weights(2)), 3},
      {build_cp(standard_cp_weights(3)), 3},         {build_hp(standard_hp_weights(2)), 3},
      {build_op2(), 2},                              {homogeneous_gkm(make_pair("A2", "T")), 2}};
  for (const auto& [g, top] : cases) {
    const auto dims = equivariant_dims(g, top);
    for (int d = 0; d <= top; ++d) {
      const auto ref = oracle::cohomology_basis(g, d);
      CHECK(dims[d] == static_cast<std::int64_t>(ref.size()));
      const TupleSpace space(g.vertex_count(), static_cast<std::size_t>(g.rank()), d);
      for (const auto& v : equivariant_basis(g, space)) CHECK(satisfies_congruences(g, space.decode(v)));
      for (const auto& c : ref) CHECK(satisfies_congruences(g, c));
    }
  }
}

TEST_CASE("Betti series") {
  // dims of H*(BT^2) x H*(S^2): (1 + s) / (1 - s)^2.
  CHECK(betti_from_dims({1, 3, 5, 7}, 2) == B{1, 1, 0, 0});
  CHECK(betti_from_dims({1, 1, 1}, 1) == B{1, 0, 0});
}

TEST_CASE("non-formal labelings are rejected") {
  // A triangle with unrelated labels is not the graph of a formal action.
  GraphBuilder b(3, 2);
  for (auto id : {"a", "b", "c"}) b.add_vertex(id);
  b.add_edge(0, 1, {1, 0, 0}).add_edge(0, 2, {0, 1, 0}).add_edge(1, 2, {0, 0, 1});
  CHECK_THROWS_AS(betti_numbers(b.build(), 2), FormalityError);
}

TEST_CASE("congruences") {
  const GKMGraph cp = build_cp(standard_cp_weights(2));
  const auto alphas = standard_cp_weights(2);
  CHECK(satisfies_congruences(cp, power_class(cp, alphas, 1)));
  CHECK(satisfies_congruences(cp, power_class(cp, alphas, 3)));
  auto bad = power_class(cp, alphas, 1);
  bad[0] += Polynomial::linear({0, 1});
  CHECK_FALSE(satisfies_congruences(cp, bad));
}

TEST_CASE("equivariant Pontryagin classes satisfy the congruences") {
  for (const GKMGraph& g : {build_sphere(standard_sphere_weights(4)), build_cp(standard_cp_weights(3)),
                            build_hp(standard_hp_weights(2)), build_op2(), homogeneous_gkm(make_pair("A2", "T"))}) {
    const auto p = equivariant_pontryagin(g, g.half_dim() / 2);
    CHECK(satisfies_congruences(g, p));
  }
}

TEST_CASE("Pontryagin relations of CP^2 and HP^2 by direct membership") {
  {
    const GKMGraph g = build_cp(standard_cp_weights(2));
    const auto p1 = oracle::component(equivariant_pontryagin(g, 1), 2);
    const auto u = power_class(g, standard_cp_weights(2), 1);
    const auto u2 = oracle::product(u, u);
    CHECK(oracle::in_positive_ideal(g, oracle::minus(p1, oracle::scaled(u2, 3)), 2));
    CHECK_FALSE(oracle::in_positive_ideal(g, u2, 2));
    CHECK_FALSE(oracle::in_positive_ideal(g, oracle::minus(p1, oracle::scaled(u2, 2)), 2));
  }
  {
    const GKMGraph g = build_hp(standard_hp_weights(2));
    const auto p = equivariant_pontryagin(g, 2);
    const auto p1 = oracle::component(p, 2), p2 = oracle::component(p, 4);
    const auto u = power_class(g, standard_hp_weights(2), 2);
    const bool plus = oracle::in_positive_ideal(g, oracle::minus(p1, oracle::scaled(u, 2)), 2);
    const bool minus = oracle::in_positive_ideal(g, oracle::minus(p1, oracle::scaled(u, -2)), 2);
    CHECK(plus != minus);
    CHECK(oracle::in_positive_ideal(g, oracle::minus(p2, oracle::scaled(oracle::product(u, u), 7)), 4));
  }
}

TEST_CASE("ordinary Pontryagin coordinates") {
  const auto s = ordinary_pontryagin(build_sphere(standard_sphere_weights(4)));
  REQUIRE(s.degrees.size() == 3);
  CHECK(s.quotient_dims == std::vector<std::size_t>{1, 0, 1});
  for (std::size_t i = 1; i < s.degrees.size(); ++i)
    for (const auto& q : s.coords[i]) CHECK(q == 0);

  const GKMGraph cp = build_cp(standard_cp_weights(2));
  const auto base = ordinary_pontryagin(cp);
  REQUIRE(base.degrees == std::vector<int>{0, 1});
  REQUIRE(base.coords[1].size() == 1);
  CHECK(base.coords[1][0] != 0);

  // Value against the membership oracle: p1 = c * g where g is the quotient
  // basis element, and u^2 has coordinate c / 3.
  const OrdinaryQuotient q(cp, 2);
  const auto u = power_class(cp, standard_cp_weights(2), 1);
  const auto ucoord = q.coordinates(oracle::product(u, u));
  REQUIRE(ucoord.size() == 1);
  CHECK(base.coords[1][0] == 3 * ucoord[0]);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) CHECK(ordinary_pontryagin(oracle::scramble(cp, rng)).coords == base.coords);

  const auto hp = ordinary_pontryagin(build_hp(standard_hp_weights(2)));
  CHECK(hp.quotient_dims == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("integer preconditions") {
  for (const GKMGraph& g : {build_sphere(standard_sphere_weights(3)), build_cp(standard_cp_weights(3)),
                            build_hp(standard_hp_weights(2))}) {
    const auto rep = integer_precondition(g);
    CHECK(rep.coprime);
    CHECK(rep.primitive);
    CHECK_FALSE(rep.lattice_mode);
  }
  const auto op = integer_precondition(build_op2());
  CHECK(op.coprime);
  CHECK(op.primitive);
  CHECK(op.lattice_mode);

  const GKMGraph bad = build_sphere({{2, 0}, {2, 4}});
  const auto rep = integer_precondition(bad);
  CHECK_FALSE(rep.coprime);
  CHECK_FALSE(rep.primitive);
  REQUIRE(rep.vertices.size() == 2);
  CHECK(rep.vertices[0].bad_pairs.size() == 1);

  // Coprime but one weight non-primitive.
  const auto half = integer_precondition(build_sphere({{1, 0}, {0, 3}}));
  CHECK(half.coprime);
  CHECK_FALSE(half.primitive);

  GraphBuilder rp(2, 2);
  rp.add_vertex("p");
  rp.add_star(0, {1, 0}).add_star(0, {0, 1}).non_orientable();
  CHECK_THROWS_AS(integer_precondition(rp.build()), PreconditionError);
}
