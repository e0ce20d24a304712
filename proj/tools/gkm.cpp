// gkm: command-line front end for GKM graph checks, cohomology and
// classification. Exit codes: 0 success, 1 input error, 2 check failed.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gkm/catalog.hpp"
#include "gkm/classifier.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/io.hpp"
#include "gkm/rootsys.hpp"

using namespace gkm;

namespace {

struct Output {
  std::string out;
  bool json = false;

  void emit(const std::string& text) const {
    if (out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out);
    if (!f) throw Error("cannot write " + out);
    f << text;
  }

  /// Prints the JSON body under --json, the text rendering otherwise.
  void report(const Json& body, const std::string& text) const { emit(json ? body.dump(2) + "\n" : text); }
};

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

int run_validate(const std::string& file, int k, const Output& o) {
  const GKMGraph g = load_graph(file);
  const ValidationReport rep = validate(g, k);
  Json body;
  body["status"] = rep.pass ? "pass" : "fail";
  body["k"] = k;
  Json vs = Json::array();
  std::ostringstream text;
  text << "GKM" << k << ": " << (rep.pass ? "pass" : "fail") << '\n';
  for (const auto& v : rep.vertices) {
    vs.push_back({{"vertex", g.vertex_id(v.vertex)}, {"degree", v.degree}, {"independent", v.independent}});
    if (!v.independent) text << "  " << g.vertex_id(v.vertex) << ": weights are not " << k << "-independent\n";
  }
  body["vertices"] = std::move(vs);
  o.report(body, text.str());
  return rep.pass ? 0 : 2;
}

int run_faces(const std::string& file, const Output& o) {
  const GKMGraph g = load_graph(file);
  const FaceReport rep = check_face_sizes(g);
  Json body;
  body["status"] = rep.pass() ? "pass" : "fail";
  Json fs = Json::array();
  std::ostringstream text;
  text << rep.faces.size() << " faces, " << rep.offending.size() << " with more than three vertices\n";
  for (const auto& f : rep.faces) {
    Json vs = Json::array();
    for (auto v : f.vertices) vs.push_back(g.vertex_id(v));
    fs.push_back({{"vertices", vs}, {"edges", f.edges}, {"closed", f.closed(g)}});
    text << " ";
    for (auto v : f.vertices) text << ' ' << g.vertex_id(v);
    text << "  (" << f.edges.size() << " edges)\n";
  }
  body["faces"] = std::move(fs);
  body["offending"] = rep.offending;
  o.report(body, text.str());
  return rep.pass() ? 0 : 2;
}

int run_betti(const std::string& file, int cutoff, const Output& o) {
  const GKMGraph g = load_graph(file);
  if (cutoff < 0) cutoff = g.half_dim();
  const auto dims = equivariant_dims(g, cutoff);
  Json body;
  body["cutoff"] = cutoff;
  body["equivariant_dims"] = dims;
  std::ostringstream text;
  try {
    const auto b = betti_numbers(g, cutoff);
    body["status"] = "pass";
    body["betti"] = b;
    for (std::size_t d = 0; d < b.size(); ++d)
      text << "b" << 2 * d << " = " << b[d] << "   (equivariant dim " << dims[d] << ")\n";
    o.report(body, text.str());
    return 0;
  } catch (const FormalityError& e) {
    body["status"] = "fail";
    body["error"] = e.what();
    o.report(body, std::string(e.what()) + "\n");
    return 2;
  }
}

int run_pontryagin(const std::string& file, const Output& o) {
  const GKMGraph g = load_graph(file);
  const EquivariantClass p = equivariant_pontryagin(g, g.half_dim() / 2);
  const bool ok = satisfies_congruences(g, p);
  const OrdinaryPontryagin ord = ordinary_pontryagin(g);
  Json body;
  body["status"] = ok ? "pass" : "fail";
  body["congruences"] = ok;
  Json eq = Json::object();
  std::ostringstream text;
  text << "equivariant class satisfies congruences: " << (ok ? "yes" : "no") << '\n';
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    eq[g.vertex_id(v)] = p[v].str();
    text << "  " << g.vertex_id(v) << ": " << p[v].str() << '\n';
  }
  body["equivariant"] = std::move(eq);
  Json classes = Json::array();
  for (std::size_t i = 0; i < ord.degrees.size(); ++i) {
    Json c = Json::array();
    text << "p" << ord.degrees[i] << " in H^" << 4 * ord.degrees[i] << " (dim " << ord.quotient_dims[i] << "):";
    for (const auto& q : ord.coords[i]) {
      c.push_back(rational_str(q));
      text << ' ' << q;
    }
    text << '\n';
    classes.push_back({{"j", ord.degrees[i]}, {"quotient_dim", ord.quotient_dims[i]}, {"coordinates", c}});
  }
  body["ordinary"] = std::move(classes);
  o.report(body, text.str());
  return ok ? 0 : 2;
}

int run_check_integer(const std::string& file, const Output& o) {
  const GKMGraph g = load_graph(file);
  const IntegerReport rep = integer_precondition(g);
  const bool ok = rep.coprime && rep.primitive;
  Json body;
  body["status"] = ok ? "pass" : "fail";
  body["coprime"] = rep.coprime;
  body["primitive"] = rep.primitive;
  body["lattice_mode"] = rep.lattice_mode;
  Json vs = Json::array();
  std::ostringstream text;
  text << "coprime: " << (rep.coprime ? "yes" : "no") << ", primitive: " << (rep.primitive ? "yes" : "no")
       << (rep.lattice_mode ? " (in the lattice spanned by the weights)" : "") << '\n';
  for (const auto& v : rep.vertices) {
    Json pairs = Json::array();
    for (auto [a, b] : v.bad_pairs) {
      pairs.push_back({a, b});
      text << "  " << g.vertex_id(v.vertex) << ": " << g.weight(a).str() << " and " << g.weight(b).str()
           << " are not coprime\n";
    }
    if (!v.primitive) text << "  " << g.vertex_id(v.vertex) << ": non-primitive weight\n";
    vs.push_back({{"vertex", g.vertex_id(v.vertex)}, {"coprime", v.coprime}, {"primitive", v.primitive},
                  {"bad_pairs", pairs}});
  }
  body["vertices"] = std::move(vs);
  o.report(body, text.str());
  return ok ? 0 : 2;
}

int run_classify(const std::string& file, const ClassifyFlags& flags, const Output& o) {
  const GKMGraph g = load_graph(file);
  const ClassificationResult res = classify(g, flags);
  Json body;
  body["status"] = res.cross.realizable() ? "realizable" : "not-realizable";
  body["verdict"] = res.cross.str();
  if (!res.violated().empty()) body["violated"] = res.violated();
  std::ostringstream text;
  text << "verdict: " << res.cross.str() << '\n';
  Json trace = Json::array();
  for (const auto& t : res.trace) {
    trace.push_back({{"lemma", t.lemma}, {"passed", t.passed}, {"detail", t.detail}});
    text << "  [" << (t.passed ? "pass" : "FAIL") << "] " << t.lemma << ": " << t.detail << '\n';
  }
  body["trace"] = std::move(trace);
  if (res.normalization) {
    Json labels = Json::array();
    text << "normal form:\n";
    for (EdgeIndex e = 0; e < g.edges().size(); ++e) {
      const auto& edge = g.edge(e);
      const std::string expr = res.normalization->expression(e, "b");
      labels.push_back({{"u", g.vertex_id(edge.u)}, {"v", g.vertex_id(edge.v)}, {"index", edge.index}, {"expression", expr}});
      text << "  " << g.vertex_id(edge.u) << " -- " << g.vertex_id(edge.v) << ": " << expr << '\n';
    }
    Json base = Json::array();
    for (const auto& w : res.normalization->base_weights) base.push_back(weight_to_json(w));
    body["normal_form"] = {{"denominator", res.normalization->denominator}, {"base_weights", base}, {"edges", labels}};
  }
  o.report(body, text.str());
  return res.cross.realizable() ? 0 : 2;
}

std::vector<Weight> read_weights(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("", "cannot open " + file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", file + ": " + e.what());
  }
  if (j.is_object() && j.contains("weights")) j = j["weights"];
  if (!j.is_array()) throw ParseError("", "expected an array of weights");
  std::vector<Weight> ws;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = "/" + std::to_string(i);
    if (!j[i].is_array()) throw ParseError(p, "expected an integer array");
    std::vector<Int> c;
    for (std::size_t t = 0; t < j[i].size(); ++t) {
      if (!j[i][t].is_number_integer()) throw ParseError(p + "/" + std::to_string(t), "expected an integer");
      c.push_back(j[i][t].get<Int>());
    }
    if (!ws.empty() && c.size() != ws.front().rank()) throw ParseError(p, "weights have different lengths");
    ws.emplace_back(std::move(c));
  }
  return ws;
}

int run_catalog(const std::string& kind, int n, const std::string& weights, bool shape_only, const Output& o) {
  GKMGraph g = [&] {
    if (kind == "op2") return build_op2();
    if (kind == "k33") return build_k33_family(n < 1 ? 1 : n, !shape_only);
    if (n < 1 && weights.empty()) throw PreconditionError("--n or --weights is required for " + kind);
    if (kind == "sphere") return build_sphere(weights.empty() ? standard_sphere_weights(n) : read_weights(weights));
    if (kind == "cp") return build_cp(weights.empty() ? standard_cp_weights(n) : read_weights(weights));
    if (kind == "hp") return build_hp(weights.empty() ? standard_hp_weights(n) : read_weights(weights));
    throw PreconditionError("unknown catalog entry " + kind);
  }();
  o.emit(graph_to_json(g).dump(2) + "\n");
  return 0;
}

int run_homogeneous(const std::string& gname, const std::string& kname, const Output& o) {
  const GKMGraph g = homogeneous_gkm(make_pair(gname, kname));
  o.emit(graph_to_json(g).dump(2) + "\n");
  return 0;
}

int run_export_dot(const std::string& file, const Output& o) {
  o.emit(export_dot(load_graph(file)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GKM graphs of positively curved torus actions"};
  app.require_subcommand(1);
  Output out;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out.out, "Write the result to this file");
    sub->add_flag("--json", out.json, "Machine-readable JSON report");
  };

  std::string file;
  int k = 3, cutoff = -1, n = 0;
  ClassifyFlags flags;
  std::string kind, weights, gname, kname;
  bool shape_only = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check the GKM_k condition at every vertex");
  validate_cmd->add_option("file", file, "Graph JSON")->required();
  validate_cmd->add_option("--k", k, "Independence order")->check(CLI::Range(2, 64));
  common(validate_cmd);

  auto* faces_cmd = app.add_subcommand("faces", "List two-dimensional faces and check their sizes");
  faces_cmd->add_option("file", file, "Graph JSON")->required();
  common(faces_cmd);

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers from equivariant cohomology");
  betti_cmd->add_option("file", file, "Graph JSON")->required();
  betti_cmd->add_option("--cutoff", cutoff, "Largest polynomial degree (default half_dim)");
  common(betti_cmd);

  auto* pont_cmd = app.add_subcommand("pontryagin", "Equivariant and ordinary Pontryagin classes");
  pont_cmd->add_option("file", file, "Graph JSON")->required();
  common(pont_cmd);

  auto* int_cmd = app.add_subcommand("check-integer", "Coprimality and primitivity of the weights");
  int_cmd->add_option("file", file, "Graph JSON")->required();
  common(int_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Identify the rank one symmetric space");
  classify_cmd->add_option("file", file, "Graph JSON")->required();
  classify_cmd->add_flag("--gkm4", flags.gkm4, "Require 4-independence");
  classify_cmd->add_flag("--almost-complex", flags.almost_complex, "Assume an invariant almost complex structure");
  classify_cmd->add_flag("--non-orientable", flags.non_orientable, "Treat the manifold as non-orientable");
  common(classify_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "Emit a standard graph");
  catalog_cmd->add_option("kind", kind, "sphere, cp, hp, op2 or k33")
      ->required()
      ->check(CLI::IsMember({"sphere", "cp", "hp", "op2", "k33"}));
  catalog_cmd->add_option("--n", n, "Dimension parameter; edge multiplicity for k33");
  catalog_cmd->add_option("--weights", weights, "JSON array of weights");
  catalog_cmd->add_flag("--shape-only", shape_only, "k33 without weights");
  common(catalog_cmd);

  auto* hom_cmd = app.add_subcommand("homogeneous", "GKM graph of G/K from root systems");
  hom_cmd->add_option("--g", gname, "Root system of G, e.g. F4")->required();
  hom_cmd->add_option("--k", kname, "Root system of K, e.g. D4, C1xC1xC1 or T")->required();
  common(hom_cmd);

  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering");
  dot_cmd->add_option("file", file, "Graph JSON")->required();
  common(dot_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*validate_cmd) return run_validate(file, k, out);
    if (*faces_cmd) return run_faces(file, out);
    if (*betti_cmd) return run_betti(file, cutoff, out);
    if (*pont_cmd) return run_pontryagin(file, out);
    if (*int_cmd) return run_check_integer(file, out);
    if (*classify_cmd) return run_classify(file, flags, out);
    if (*catalog_cmd) return run_catalog(kind, n, weights, shape_only, out);
    if (*hom_cmd) return run_homogeneous(gname, kname, out);
    if (*dot_cmd) return run_export_dot(file, out);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const FormalityError& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
