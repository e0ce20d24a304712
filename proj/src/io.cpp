#include "gkm/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace gkm {

Json weight_to_json(const Weight& w) {
  Json a = Json::array();
  for (Int c : w.coords()) a.push_back(c);
  return a;
}

Json graph_to_json(const GKMGraph& g) {
  Json j;
  j["rank"] = g.rank();
  j["half_dim"] = g.half_dim();
  j["orientable"] = g.orientable();
  if (g.scale() != 1) j["scale"] = g.scale();
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json je;
    je["u"] = g.vertex_id(e.u);
    je["v"] = g.vertex_id(e.v);
    je["weight"] = e.weight ? weight_to_json(e.weight->rep()) : Json(nullptr);
    je["index"] = e.index;
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  Json stars = Json::array();
  for (const auto& s : g.star_edges()) {
    Json js;
    js["v"] = g.vertex_id(s.v);
    js["weight"] = weight_to_json(s.weight.rep());
    stars.push_back(std::move(js));
  }
  j["star_edges"] = std::move(stars);
  return j;
}

namespace {

const Json& field(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path, std::string("missing field \"") + key + "\"");
  return *it;
}

Int integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
  return v.get<Int>();
}

Weight weight(const Json& v, const std::string& path, int rank) {
  if (!v.is_array()) throw ParseError(path, "expected an integer array");
  if (static_cast<int>(v.size()) != rank)
    throw ParseError(path, "weight has " + std::to_string(v.size()) + " entries, rank is " + std::to_string(rank));
  std::vector<Int> c;
  for (std::size_t i = 0; i < v.size(); ++i) c.push_back(integer(v[i], path + "/" + std::to_string(i)));
  Weight w(std::move(c));
  if (w.is_zero()) throw ParseError(path, "zero weight");
  return w;
}

VertexIndex vertex_ref(const Json& v, const std::string& path, const std::vector<std::string>& ids) {
  if (!v.is_string()) throw ParseError(path, "expected a vertex id");
  auto it = std::find(ids.begin(), ids.end(), v.get<std::string>());
  if (it == ids.end()) throw ParseError(path, "unknown vertex \"" + v.get<std::string>() + "\"");
  return static_cast<VertexIndex>(it - ids.begin());
}

}  // namespace

GKMGraph graph_from_json(const Json& j) {
  const Int rank = integer(field(j, "", "rank"), "/rank");
  const Int half_dim = integer(field(j, "", "half_dim"), "/half_dim");
  if (rank < 1) throw ParseError("/rank", "rank must be positive");
  const Json& orient = field(j, "", "orientable");
  if (!orient.is_boolean()) throw ParseError("/orientable", "expected a boolean");
  Int scale = 1;
  if (j.contains("scale")) scale = integer(j["scale"], "/scale");

  const Json& jv = field(j, "", "vertices");
  if (!jv.is_array()) throw ParseError("/vertices", "expected an array");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    if (!jv[i].is_string()) throw ParseError("/vertices/" + std::to_string(i), "expected a string");
    ids.push_back(jv[i].get<std::string>());
  }

  const Json& je = field(j, "", "edges");
  if (!je.is_array()) throw ParseError("/edges", "expected an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string p = "/edges/" + std::to_string(i);
    const Json& e = je[i];
    Edge edge{vertex_ref(field(e, p, "u"), p + "/u", ids), vertex_ref(field(e, p, "v"), p + "/v", ids), std::nullopt,
              static_cast<int>(integer(field(e, p, "index"), p + "/index"))};
    const Json& w = field(e, p, "weight");
    if (!w.is_null()) edge.weight = canonicalize(weight(w, p + "/weight", static_cast<int>(rank)));
    edges.push_back(std::move(edge));
  }

  std::vector<StarEdge> stars;
  if (j.contains("star_edges")) {
    const Json& js = j["star_edges"];
    if (!js.is_array()) throw ParseError("/star_edges", "expected an array");
    for (std::size_t i = 0; i < js.size(); ++i) {
      const std::string p = "/star_edges/" + std::to_string(i);
      stars.push_back(StarEdge{vertex_ref(field(js[i], p, "v"), p + "/v", ids),
                               canonicalize(weight(field(js[i], p, "weight"), p + "/weight", static_cast<int>(rank)))});
    }
  }

  try {
    return GKMGraph(static_cast<int>(rank), static_cast<int>(half_dim), std::move(ids), std::move(edges),
                    orient.get<bool>(), std::move(stars), static_cast<int>(scale));
  } catch (const StructuralError& e) {
    throw ParseError("", e.what());
  }
}

GKMGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", path + ": " + e.what());
  }
  return graph_from_json(j);
}

void save_graph(const GKMGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << graph_to_json(g).dump(2) << '\n';
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

bool bipartite(const GKMGraph& g, std::vector<int>& side) {
  side.assign(g.vertex_count(), -1);
  for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<VertexIndex> stack{s};
    while (!stack.empty()) {
      VertexIndex v = stack.back();
      stack.pop_back();
      for (EdgeIndex e : g.incident(v)) {
        VertexIndex w = g.edge(e).other(v);
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::string export_dot(const GKMGraph& g) {
  std::vector<VertexIndex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return g.vertex_id(a) < g.vertex_id(b); });

  std::ostringstream os;
  os << "graph gkm {\n";
  os << "  node [shape=circle];\n";
  for (VertexIndex v : order) os << "  " << quoted(g.vertex_id(v)) << ";\n";

  std::vector<int> side;
  if (g.vertex_count() > 2 && bipartite(g, side)) {
    for (int s = 0; s < 2; ++s) {
      os << "  { rank=same;";
      for (VertexIndex v : order)
        if (side[v] == s) os << ' ' << quoted(g.vertex_id(v)) << ';';
      os << " }\n";
    }
  }

  struct Line {
    std::string a, b;
    int index;
    std::string label;
  };
  std::vector<Line> lines;
  for (const auto& e : g.edges()) {
    std::string a = g.vertex_id(e.u), b = g.vertex_id(e.v);
    if (b < a) std::swap(a, b);
    lines.push_back({a, b, e.index, e.weight ? e.weight->str() : std::string()});
  }
  std::sort(lines.begin(), lines.end(),
            [](const Line& x, const Line& y) { return std::tie(x.a, x.b, x.index) < std::tie(y.a, y.b, y.index); });
  for (const auto& l : lines) {
    os << "  " << quoted(l.a) << " -- " << quoted(l.b);
    if (!l.label.empty()) os << " [label=" << quoted(l.label) << "]";
    os << ";\n";
  }

  std::vector<std::pair<std::string, std::string>> stars;
  for (const auto& s : g.star_edges()) stars.emplace_back(g.vertex_id(s.v), s.weight.str());
  std::sort(stars.begin(), stars.end());
  for (std::size_t i = 0; i < stars.size(); ++i) {
    const std::string node = quoted("star" + std::to_string(i));
    os << "  " << node << " [shape=point];\n";
    os << "  " << quoted(stars[i].first) << " -- " << node << " [style=dashed, label=" << quoted(stars[i].second)
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace gkm
