#include "geocover/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "geocover/errors.hpp"

namespace geocover {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Byte offset to line and column (1-based).
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    const auto cut = msg.find(": ");
    throw ParseError(std::string(what) + ": line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " +
                     (cut == std::string::npos ? msg : msg.substr(cut + 2)));
  }
}

[[noreturn]] void field_error(const std::string& field, const std::string& why) {
  throw ParseError("field '" + field + "': " + why);
}

void only_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) field_error(where.empty() ? "<root>" : where, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) field_error(where.empty() ? k : where + "." + k, "unknown field");
  }
}

const Json& require(const Json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) field_error(where.empty() ? key : where + "." + key, "missing");
  return obj.at(key);
}

std::string at_index(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  const Json doc = parse_json(text, "graph");
  only_keys(doc, "", {"name", "vertices", "edges"});
  if (doc.contains("name") && !doc["name"].is_string()) field_error("name", "expected a string");
  const Json& vs = require(doc, "", "vertices");
  const Json& es = require(doc, "", "edges");
  if (!vs.is_array()) field_error("vertices", "expected an array of names");
  if (!es.is_array()) field_error("edges", "expected an array of [u, v] pairs");

  Multigraph g;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) field_error(at_index("vertices", i), "expected a string");
    const std::string name = vs[i].get<std::string>();
    if (name.empty()) field_error(at_index("vertices", i), "empty name");
    if (name.find_first_of(":\"") != std::string::npos) {
      field_error(at_index("vertices", i), "name may not contain ':' or '\"'");
    }
    if (!seen.insert(name).second) field_error(at_index("vertices", i), "duplicate name '" + name + "'");
    g.add_vertex(name);
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = at_index("edges", i);
    if (!es[i].is_array() || es[i].size() != 2) field_error(where, "expected [u, v]");
    VertexId ends[2];
    for (std::size_t k = 0; k < 2; ++k) {
      const Json& x = es[i][k];
      const std::string f = at_index(where, k);
      if (x.is_number_integer()) {
        const auto idx = x.get<long long>();
        if (idx < 0 || static_cast<std::size_t>(idx) >= g.num_vertices()) {
          field_error(f, "vertex index " + std::to_string(idx) + " out of range");
        }
        ends[k] = static_cast<VertexId>(idx);
      } else if (x.is_string()) {
        const auto v = g.find_vertex(x.get<std::string>());
        if (!v) field_error(f, "unknown vertex '" + x.get<std::string>() + "'");
        ends[k] = *v;
      } else {
        field_error(f, "expected a vertex name or index");
      }
    }
    g.add_edge(ends[0], ends[1]);
  }
  try {
    two_subdivision(g);  // rejects midpoint names clashing with vertex names
  } catch (const ContractError& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
  return g;
}

Json graph_to_json(const Multigraph& g) {
  Json doc;
  doc["vertices"] = Json::array();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) doc["vertices"].push_back(g.name(static_cast<VertexId>(v)));
  doc["edges"] = Json::array();
  for (const auto& e : g.edges()) doc["edges"].push_back({g.name(e.u), g.name(e.v)});
  return doc;
}

namespace {

// Segments joining consecutive vertices a and b of the subdivision.
std::vector<EdgeId> joining(const SubdividedGraph& sg, VertexId a, VertexId b) {
  std::vector<EdgeId> out;
  for (EdgeId s : sg.graph.incident(a)) {
    if (sg.graph.edge(s).other(a) == b && std::find(out.begin(), out.end(), s) == out.end()) {
      out.push_back(s);
    }
  }
  return out;
}

VertexId vertex_named(const SubdividedGraph& sg, const Json& x, const std::string& where) {
  if (!x.is_string()) field_error(where, "expected a vertex name");
  const auto v = sg.graph.find_vertex(x.get<std::string>());
  if (!v) field_error(where, "unknown vertex '" + x.get<std::string>() + "'");
  return *v;
}

bool ambiguous(const PathSeq& p, const SubdividedGraph& sg) {
  for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
    if (joining(sg, p.vertices[k], p.vertices[k + 1]).size() > 1) return true;
  }
  return false;
}

}  // namespace

std::vector<PathSeq> parse_cover(std::string_view text, const SubdividedGraph& sg) {
  const Json doc = parse_json(text, "cover");
  only_keys(doc, "", {"paths"});
  const Json& ps = require(doc, "", "paths");
  if (!ps.is_array()) field_error("paths", "expected an array");
  std::vector<PathSeq> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string where = at_index("paths", i);
    PathSeq p;
    const Json* vs = &ps[i];
    if (ps[i].is_object()) {
      only_keys(ps[i], where, {"vertices", "segments"});
      vs = &require(ps[i], where, "vertices");
      const Json& ss = require(ps[i], where, "segments");
      if (!ss.is_array()) field_error(where + ".segments", "expected an array");
      for (std::size_t k = 0; k < ss.size(); ++k) {
        const std::string f = at_index(where + ".segments", k);
        if (!ss[k].is_string()) field_error(f, "expected a segment name");
        const auto s = sg.find_segment(ss[k].get<std::string>());
        if (!s) field_error(f, "unknown segment '" + ss[k].get<std::string>() + "'");
        p.edges.push_back(*s);
      }
    }
    if (!vs->is_array()) field_error(where, "expected a list of vertex names");
    for (std::size_t k = 0; k < vs->size(); ++k) {
      p.vertices.push_back(vertex_named(sg, (*vs)[k], at_index(where, k)));
    }
    if (p.vertices.size() < 2) field_error(where, "a path needs at least two vertices");
    if (ps[i].is_object()) {
      if (p.edges.size() + 1 != p.vertices.size()) {
        field_error(where, "needs exactly one segment per step");
      }
    } else {
      for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
        const auto js = joining(sg, p.vertices[k], p.vertices[k + 1]);
        if (js.empty()) {
          field_error(at_index(where, k + 1), "'" + sg.graph.name(p.vertices[k]) + "' and '" +
                                                  sg.graph.name(p.vertices[k + 1]) +
                                                  "' are not adjacent");
        }
        if (js.size() > 1) {
          field_error(at_index(where, k + 1),
                      "step is ambiguous (loop); use the {vertices, segments} form");
        }
        p.edges.push_back(js.front());
      }
    }
    p = canonical(p);
    if (!is_canonical_simple_path(sg.graph, p)) {
      field_error(where, "not a simple path with distinct ends in the 2-subdivision");
    }
    out.push_back(std::move(p));
  }
  return out;
}

Json path_to_json(const PathSeq& p, const SubdividedGraph& sg) {
  Json vs = Json::array();
  for (VertexId v : p.vertices) vs.push_back(sg.graph.name(v));
  if (!ambiguous(p, sg)) return vs;
  Json obj;
  obj["vertices"] = std::move(vs);
  obj["segments"] = Json::array();
  for (EdgeId s : p.edges) obj["segments"].push_back(sg.segment_name(s));
  return obj;
}

Json cover_to_json(std::span<const PathSeq> paths, const SubdividedGraph& sg) {
  Json doc;
  doc["paths"] = Json::array();
  for (const auto& p : paths) doc["paths"].push_back(path_to_json(p, sg));
  return doc;
}

Weighting parse_weights(std::string_view text, const SubdividedGraph& sg) {
  const Json doc = parse_json(text, "weights");
  only_keys(doc, "", {"default", "weights"});
  std::vector<std::optional<Rational>> w(sg.num_segments());
  auto value = [](const Json& x, const std::string& where) {
    Rational r;
    if (x.is_number_integer()) {
      r = Rational(x.get<long>());
    } else if (x.is_string()) {
      try {
        r = parse_fraction(x.get<std::string>());
      } catch (const std::invalid_argument& e) {
        field_error(where, e.what());
      }
    } else {
      field_error(where, "expected an integer or a \"p/q\" string");
    }
    if (sgn(r) <= 0) field_error(where, "weights must be positive");
    return r;
  };
  if (doc.contains("default")) {
    const Rational d = value(doc["default"], "default");
    for (auto& x : w) x = d;
  }
  if (doc.contains("weights")) {
    const Json& ws = doc["weights"];
    if (!ws.is_object()) field_error("weights", "expected an object keyed by segment name");
    for (const auto& [name, x] : ws.items()) {
      const auto s = sg.find_segment(name);
      if (!s) field_error("weights." + name, "unknown segment");
      w[static_cast<std::size_t>(*s)] = value(x, "weights." + name);
    }
  }
  Weighting out;
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (!w[s]) field_error("weights", "no value for segment " + sg.segment_name(static_cast<EdgeId>(s)));
    out.weight.push_back(*w[s]);
  }
  return out;
}

Json weights_to_json(const Weighting& w, const SubdividedGraph& sg) {
  Json doc;
  doc["weights"] = Json::object();
  for (std::size_t s = 0; s < w.weight.size(); ++s) {
    doc["weights"][sg.segment_name(static_cast<EdgeId>(s))] = to_fraction_string(w.weight[s]);
  }
  return doc;
}

namespace {

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const SubdividedGraph& sg, std::span<const PathSeq> paths,
                   const std::optional<Weighting>& weights, const std::string& title) {
  std::vector<std::vector<std::size_t>> on(sg.num_segments());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (EdgeId s : paths[i].edges) on[static_cast<std::size_t>(s)].push_back(i);
  }
  std::ostringstream out;
  out << "graph " << quoted(title) << " {\n";
  out << "  node [shape=circle, style=filled, fillcolor=\"#d0d0d0\"];\n";
  for (std::size_t v = 0; v < sg.graph.num_vertices(); ++v) {
    const auto id = static_cast<VertexId>(v);
    out << "  " << quoted(sg.graph.name(id));
    if (!sg.is_original(id)) out << " [shape=point, width=0.08]";
    out << ";\n";
  }
  for (std::size_t s = 0; s < sg.num_segments(); ++s) {
    const Edge& e = sg.graph.edge(static_cast<EdgeId>(s));
    out << "  " << quoted(sg.graph.name(e.u)) << " -- " << quoted(sg.graph.name(e.v)) << " [";
    if (on[s].empty()) {
      out << "color=\"#bbbbbb\", style=dashed";
    } else {
      std::string colors;
      for (std::size_t i : on[s]) {
        if (!colors.empty()) colors += ":";
        colors += kPalette[i % std::size(kPalette)];
      }
      out << "color=" << quoted(colors) << ", penwidth=2.5";
    }
    if (weights) out << ", label=" << quoted(to_fraction_string(weights->weight[s]));
    out << "];\n";
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    std::string names;
    for (VertexId v : paths[i].vertices) {
      if (!names.empty()) names += " ";
      names += sg.graph.name(v);
    }
    out << "  // path " << i + 1 << " " << kPalette[i % std::size(kPalette)] << ": " << names << "\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace geocover
