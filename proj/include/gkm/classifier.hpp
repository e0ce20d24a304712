#pragma once

// Combinatorial classification of GKM graphs of positively curved manifolds:
// face sizes, sign systems on triangles, bundle multiplicities, and the final
// identification with one of the rank one symmetric spaces.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkm/catalog.hpp"
#include "gkm/error.hpp"
#include "gkm/graph.hpp"

namespace gkm {

/// Identifiers of the checks recorded in a classification trace.
namespace lemma {
inline constexpr const char* k_independence = "gkm-k-independence";
inline constexpr const char* face_size = "face-size";
inline constexpr const char* uniform_multiplicity = "uniform-multiplicity";
inline constexpr const char* multiplicity_124 = "multiplicity-1-2-4";
inline constexpr const char* quadruple_triangle = "quadruple-only-triangle";
inline constexpr const char* no_biangle = "no-biangle";
inline constexpr const char* gkm4_sphere_or_cp = "gkm4-sphere-or-cp";
inline constexpr const char* single_vertex = "non-orientable-single-vertex";
inline constexpr const char* sign_system = "sign-system";
inline constexpr const char* cp_labels = "cp-labels";
inline constexpr const char* hp_labels = "hp-labels";
inline constexpr const char* op2_labels = "op2-labels";
inline constexpr const char* empty_graph = "empty-graph";
}  // namespace lemma

/// A failed combinatorial condition; lemma() names it.
class LemmaViolation : public Error {
 public:
  LemmaViolation(std::string lemma, const std::string& what) : Error(what), lemma_(std::move(lemma)) {}
  const std::string& lemma() const { return lemma_; }

 private:
  std::string lemma_;
};

struct FaceReport {
  std::vector<Face> faces;
  /// Indices into faces of those with more than three vertices.
  std::vector<std::size_t> offending;
  bool pass() const { return offending.empty(); }
};

/// Every face has two or three vertices.
FaceReport check_face_sizes(const GKMGraph& g);

struct EdgeBundle {
  VertexIndex u = 0;
  VertexIndex v = 0;
  std::vector<EdgeIndex> edges;
};

/// Nonempty bundles, u < v, in vertex order.
std::vector<EdgeBundle> edge_bundles(const GKMGraph& g);

/// Signs and permutations expressing the bundle v2v3 through the other two
/// bundles of a triangle v1v2v3 with k edges per bundle:
///   gamma_i = alpha_1 - beta_i = eps[i][j] * alpha_j + delta[i][j] * beta_{sigma[j][i]}
/// where alpha are the v1v2 weights, beta the v1v3 weights, gamma the v2v3
/// weights, all with chosen signs, and sigma[0] is the identity. Indices are
/// zero based.
struct SignSystem {
  std::array<VertexIndex, 3> triangle{};
  std::size_t k = 0;
  std::vector<Weight> alpha, beta, gamma;
  /// Edge carrying alpha[i] (beta[i], gamma[i]).
  std::vector<EdgeIndex> alpha_edges, beta_edges, gamma_edges;
  std::vector<std::vector<int>> eps, delta;   // [i][j]
  std::vector<std::vector<std::size_t>> sigma;  // [j][i]

  /// The defining relation holds for all i, j.
  bool consistent() const;
};

/// Builds the sign system of a triangle and checks that sigma_j^-1 sigma_i is
/// a fixed-point-free involution for i != j, that delta = +1 and
/// eps[sigma_j(i)][j] = eps[i][j] for j > 0, and that eps[sigma_j(i)][1] =
/// -eps[i][1] for j > 1. Throws LemmaViolation(sign_system) otherwise.
SignSystem extract_sign_system(const GKMGraph& g, const std::array<VertexIndex, 3>& triangle);

/// Common bundle size k of a complete graph on >= 3 vertices. Throws
/// LemmaViolation for a non-simplex shape or unequal bundles
/// (uniform_multiplicity), k not in {1, 2, 4} (multiplicity_124), or k = 4
/// with more than three vertices (quadruple_triangle).
int check_multiplicity(const GKMGraph& g);

struct ClassifyFlags {
  bool gkm4 = false;
  bool almost_complex = false;
  /// Treat the input as non-orientable regardless of the graph's own flag.
  bool non_orientable = false;
};

struct TraceEntry {
  std::string lemma;
  bool passed = true;
  std::string detail;
};

struct ClassificationResult {
  CrossType cross;
  std::optional<NormalizedLabels> normalization;
  std::vector<TraceEntry> trace;

  /// Lemma of the first failed trace entry, empty if none failed.
  std::string violated() const;
};

/// Never throws for well-formed graphs: failures become NotRealizable with the
/// violated check in the trace. Shape-only graphs raise PreconditionError.
ClassificationResult classify(const GKMGraph& g, const ClassifyFlags& flags = {});

struct SignSystemCandidate {
  std::vector<std::vector<std::size_t>> sigma;  // [j][i], sigma[0] = id
  std::vector<std::vector<int>> eps;            // [i][j]
  std::vector<std::vector<int>> delta;          // [i][j]
};

struct ExclusionReport {
  int k = 0;
  bool complete = true;
  std::uint64_t nodes = 0;
  std::vector<SignSystemCandidate> survivors;

  /// Every survivor's permutations generate a group isomorphic to Z2^2
  /// acting simply transitively on {0..k-1}.
  bool all_klein_transitive() const;
};

/// Exhaustive search over permutation tuples and sign vectors satisfying the
/// sign-system rules for bundle size k. Stops and flags the report incomplete
/// after node_budget search nodes.
ExclusionReport brute_force_k_exclusion(int k, std::uint64_t node_budget = 50'000'000);

/// Whether the permutations and eps signs of an extracted sign system appear
/// among the survivors.
bool matches_survivor(const SignSystem& s, const ExclusionReport& report);

}  // namespace gkm
