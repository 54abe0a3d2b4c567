// geocover: geodesic cover numbers of multigraphs, path-system
// classification and the three-geodesic configuration atlas.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "geocover/driver.hpp"
#include "geocover/io.hpp"
#include "geocover/standard_graphs.hpp"
#include "geocover/triple.hpp"

using namespace geocover;

namespace {

enum Exit { ok = 0, failure = 1, parse_failure = 2, budget_failure = 3, diff_mismatch = 4 };

struct GraphSource {
  std::string file;
  std::vector<std::string> std_spec;  // tag followed by integer parameters
};

struct Budgets {
  std::uint64_t nodes = DriverOptions{}.max_search_nodes;
  std::uint64_t pivots = DriverOptions{}.max_pivots;
  std::size_t pool = DriverOptions{}.max_pool;
  int size = 0;  // 0: no cap
};

struct Common {
  std::string format = "text";
  bool normalize = false;
  bool timing = false;
  std::string output;
};

// GEOCOVER_BUDGET="nodes=1e6,pivots=5000,pool=100000,size=6"
Budgets budgets_from_env() {
  Budgets b;
  const char* env = std::getenv("GEOCOVER_BUDGET");
  if (!env || !*env) return b;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("GEOCOVER_BUDGET: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ParseError("GEOCOVER_BUDGET: bad number in '" + item + "'");
    }
    if (value < 1) throw ParseError("GEOCOVER_BUDGET: " + key + " must be positive");
    if (key == "nodes") {
      b.nodes = static_cast<std::uint64_t>(value);
    } else if (key == "pivots") {
      b.pivots = static_cast<std::uint64_t>(value);
    } else if (key == "pool") {
      b.pool = static_cast<std::size_t>(value);
    } else if (key == "size") {
      b.size = static_cast<int>(value);
    } else {
      throw ParseError("GEOCOVER_BUDGET: unknown key '" + key + "'");
    }
  }
  return b;
}

Multigraph load_graph(const GraphSource& src) {
  if (!src.file.empty() && !src.std_spec.empty()) throw ParseError("give either --graph or --std, not both");
  if (!src.file.empty()) {
    try {
      return parse_graph(read_text_file(src.file));
    } catch (const ParseError& e) {
      throw ParseError(src.file + ": " + e.what());
    }
  }
  if (src.std_spec.empty()) throw ParseError("no graph given (use --graph FILE or --std NAME PARAMS...)");
  std::vector<int> params;
  for (std::size_t i = 1; i < src.std_spec.size(); ++i) {
    try {
      std::size_t used = 0;
      params.push_back(std::stoi(src.std_spec[i], &used));
      if (used != src.std_spec[i].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("--std: parameter '" + src.std_spec[i] + "' is not an integer");
    }
  }
  try {
    return build_standard(src.std_spec[0], params);
  } catch (const ContractError& e) {
    throw ParseError(std::string("--std: ") + e.what());
  }
}

void add_graph_options(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--graph", src.file, "Graph file (JSON: vertices, edges)");
  cmd->add_option("--std", src.std_spec,
                  "Standard graph: NAME PARAMS..., NAME one of complete, complete_bipartite, "
                  "path, cycle, star, caterpillar, sawtooth, bouquet")
      ->expected(1, 3);
}

void add_common_options(CLI::App* cmd, Common& c, const std::vector<std::string>& formats) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_flag("--timing", c.timing, "Print wall-clock time (makes output run-dependent)");
  cmd->add_option("-o,--output", c.output, "Write the report to this file instead of stdout");
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw ParseError(c.output + ": cannot write");
  out << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot write");
  out << text;
}

std::string path_names(const PathSeq& p, const SubdividedGraph& sg) {
  std::string s;
  for (std::size_t k = 0; k < p.vertices.size(); ++k) {
    if (k > 0) s += " ";
    s += sg.graph.name(p.vertices[k]);
  }
  return s;
}

void print_weights(std::ostream& out, const Weighting& w, const SubdividedGraph& sg) {
  for (const auto& [name, value] : format_witness(w, sg)) out << "    " << name << " " << value << "\n";
}

// ---------------------------------------------------------------------------
// number / distinct

struct CoverArgs {
  GraphSource src;
  Common common;
  bool unweighted = false;
  int max_size = 0;
  std::uint64_t nodes = 0, pivots = 0;
  std::size_t pool = 0;
  bool no_symmetry = false, no_rerouting = false, no_order_filter = false;
  std::string emit_prefix;
};

void add_cover_options(CLI::App* cmd, CoverArgs& a, bool census) {
  add_graph_options(cmd, a.src);
  add_common_options(cmd, a.common, {"text", "json", "dot"});
  cmd->add_flag("--unweighted", a.unweighted, "Fix every segment length to 1 instead of solving for weights");
  cmd->add_flag("--normalize", a.common.normalize, "Scale witness weights so the smallest is 1");
  cmd->add_option("--max-size", a.max_size, "Give up (exit 3) rather than try covers larger than this")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-nodes", a.nodes, "Search node budget (overrides GEOCOVER_BUDGET nodes)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-pivots", a.pivots, "Simplex pivot budget per program (overrides pivots)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-pool", a.pool, "Cap on candidate paths (overrides pool)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--no-symmetry", a.no_symmetry, "Do not prune covers by graph automorphisms");
  cmd->add_flag("--no-order-filter", a.no_order_filter,
                "Do not prune path pairs visiting shared vertices in conflicting orders");
  if (census) cmd->add_flag("--no-rerouting", a.no_rerouting, "Do not merge covers one rerouting move apart");
  cmd->add_option("--emit", a.emit_prefix,
                  "Write witness files PREFIX.cover.json and PREFIX.weights.json "
                  "(PREFIX-K.* per class for distinct)");
}

DriverOptions driver_options(const CoverArgs& a) {
  const Budgets env = budgets_from_env();
  DriverOptions o;
  o.mode = a.unweighted ? Mode::unweighted : Mode::weighted;
  o.max_search_nodes = a.nodes ? a.nodes : env.nodes;
  o.max_pivots = a.pivots ? a.pivots : env.pivots;
  o.max_pool = a.pool ? a.pool : env.pool;
  const int size = a.max_size ? a.max_size : env.size;
  if (size > 0) o.max_size = size;
  o.use_symmetry = !a.no_symmetry;
  o.use_rerouting = !a.no_rerouting;
  o.use_order_filter = !a.no_order_filter;
  return o;
}

std::string render_report(const CoverNumberReport& r, const CoverArgs& a) {
  const auto& sg = r.subdivided;
  auto weights_of = [&](const Witness& w) { return a.common.normalize ? normalize(w.weights) : w.weights; };

  if (a.common.format == "dot") {
    std::string out;
    for (std::size_t k = 0; k < r.witnesses.size(); ++k) {
      out += to_dot(sg, r.witnesses[k].paths, weights_of(r.witnesses[k]),
                    "cover " + std::to_string(k + 1));
    }
    return out;
  }
  if (a.common.format == "json") {
    Json doc;
    doc["vertices"] = sg.origin.num_vertices();
    doc["edges"] = sg.origin.num_edges();
    doc["segments"] = sg.num_segments();
    doc["mode"] = to_string(r.mode);
    doc["cover_number"] = r.cover_number;
    doc["lower_bound"] = r.lower;
    doc["upper_bound"] = r.upper;
    if (r.distinct_count) doc["distinct_classes"] = *r.distinct_count;
    doc["witnesses"] = Json::array();
    for (const auto& w : r.witnesses) {
      Json jw = cover_to_json(w.paths, sg);
      jw["weights"] = weights_to_json(weights_of(w), sg)["weights"];
      doc["witnesses"].push_back(std::move(jw));
    }
    doc["counters"] = {{"search_nodes", r.counters.search_nodes},
                       {"candidates", r.counters.candidates},
                       {"feasibility_checks", r.counters.feasibility_checks},
                       {"pivots", r.counters.pivots}};
    if (a.common.timing) doc["seconds"] = r.seconds;
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "graph: " << sg.origin.num_vertices() << " vertices, " << sg.origin.num_edges() << " edges, "
      << sg.num_segments() << " segments after subdivision\n";
  out << "mode: " << to_string(r.mode) << "\n";
  out << "cover number: " << r.cover_number << "\n";
  out << "bounds: [" << r.lower << ", " << r.upper << "]\n";
  if (r.distinct_count) out << "distinct classes: " << *r.distinct_count << "\n";
  for (std::size_t k = 0; k < r.witnesses.size(); ++k) {
    const auto& w = r.witnesses[k];
    out << (r.distinct_count ? "class " + std::to_string(k + 1) : std::string("witness")) << ":\n";
    for (std::size_t i = 0; i < w.paths.size(); ++i) {
      out << "  path " << i + 1 << ": " << path_names(w.paths[i], sg) << "\n";
    }
    out << "  weights:\n";
    print_weights(out, weights_of(w), sg);
  }
  out << "search: " << r.counters.search_nodes << " nodes, " << r.counters.candidates << " candidates, "
      << r.counters.feasibility_checks << " feasibility checks, " << r.counters.pivots << " pivots\n";
  if (a.common.timing) out << "time: " << r.seconds << " s\n";
  return out.str();
}

void emit_witnesses(const CoverNumberReport& r, const CoverArgs& a) {
  if (a.emit_prefix.empty()) return;
  for (std::size_t k = 0; k < r.witnesses.size(); ++k) {
    const std::string stem =
        r.distinct_count ? a.emit_prefix + "-" + std::to_string(k + 1) : a.emit_prefix;
    const auto& w = r.witnesses[k];
    write_file(stem + ".cover.json", cover_to_json(w.paths, r.subdivided).dump(2) + "\n");
    const Weighting ws = a.common.normalize ? normalize(w.weights) : w.weights;
    write_file(stem + ".weights.json", weights_to_json(ws, r.subdivided).dump(2) + "\n");
  }
}

int run_cover(const CoverArgs& a, bool census) {
  const Multigraph g = load_graph(a.src);
  const DriverOptions o = driver_options(a);
  try {
    const auto r = census ? distinct_optimal_covers(g, o) : cover_number(g, o);
    emit(a.common, render_report(r, a));
    emit_witnesses(r, a);
    return ok;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    std::cerr << "cover number lies in [" << e.lower << ", " << e.upper << "]\n";
    return budget_failure;
  }
}

// ---------------------------------------------------------------------------
// feasible

struct FeasibleArgs {
  GraphSource src;
  Common common;
  std::string cover_file;
  std::string weights_file;
  bool unweighted = false;
  std::uint64_t pivots = 0;
};

int run_feasible(const FeasibleArgs& a) {
  const Multigraph g = load_graph(a.src);
  const SubdividedGraph sg = two_subdivision(g);
  std::vector<PathSeq> paths;
  try {
    paths = parse_cover(read_text_file(a.cover_file), sg);
  } catch (const ParseError& e) {
    throw ParseError(a.cover_file + ": " + e.what());
  }
  const Budgets env = budgets_from_env();
  const PathPool pool(sg, env.pool);  // competitors for every endpoint pair
  Cover c;
  for (const auto& p : paths) c.push_back(*pool.find(p));
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::vector<std::string> missing;
  Bits covered(sg.num_segments());
  for (int i : c) covered |= pool.segments_of(i);
  for (std::size_t s = 0; s < sg.num_segments(); ++s) {
    if (!covered.test(s)) missing.push_back(sg.segment_name(static_cast<EdgeId>(s)));
  }

  std::ostringstream out;
  Json doc;
  doc["paths"] = paths.size();
  const bool retracted = is_retracted(std::span<const PathSeq>(paths));
  doc["covers_all_segments"] = missing.empty();
  doc["retracted"] = retracted;
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    std::cerr << "coverage error: segments not covered: " << list << "\n";
    return failure;
  }

  if (!a.weights_file.empty() || a.unweighted) {
    Weighting w = Weighting::uniform(sg.num_segments(), 1);
    if (!a.weights_file.empty()) {
      try {
        w = parse_weights(read_text_file(a.weights_file), sg);
      } catch (const ParseError& e) {
        throw ParseError(a.weights_file + ": " + e.what());
      }
    }
    const bool accepted = check_fixed_weights(paths, w, sg);
    doc["weights"] = a.weights_file.empty() ? "unit" : a.weights_file;
    doc["accepted"] = accepted;
    if (a.common.format == "json") {
      emit(a.common, doc.dump(2) + "\n");
    } else {
      out << "cover: " << paths.size() << " paths, all segments covered"
          << (retracted ? ", retracted" : ", not retracted") << "\n";
      out << "weights: " << (accepted ? "accepted" : "rejected")
          << " (every path is " << (accepted ? "" : "not ") << "a shortest path)\n";
      emit(a.common, out.str());
    }
    return ok;
  }

  const auto t0 = std::chrono::steady_clock::now();
  FeasibilityResult r;
  try {
    r = solve_feasibility(build_feasibility_program(c, pool), LPLimits{a.pivots ? a.pivots : env.pivots});
  } catch (const LimitExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return budget_failure;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::optional<Weighting> w = r.witness;
  if (w && a.common.normalize) w = normalize(*w);
  if (a.common.format == "json") {
    doc["feasible"] = r.feasible;
    doc["pivots"] = r.pivots;
    if (w) doc["witness"] = weights_to_json(*w, sg)["weights"];
    if (a.common.timing) doc["seconds"] = secs;
    emit(a.common, doc.dump(2) + "\n");
  } else {
    out << "cover: " << paths.size() << " paths, all segments covered"
        << (retracted ? ", retracted" : ", not retracted") << "\n";
    out << "verdict: " << (r.feasible ? "feasible" : "infeasible") << "\n";
    if (w) {
      out << "witness weights:\n";
      print_weights(out, *w, sg);
    }
    out << "pivots: " << r.pivots << "\n";
    if (a.common.timing) out << "time: " << secs << " s\n";
    emit(a.common, out.str());
  }
  return ok;
}

// ---------------------------------------------------------------------------
// classify2 / classify3

struct ClassifyArgs {
  std::string file;
  std::vector<std::string> inline_paths;
  Common common;
};

PathSystem load_system(const ClassifyArgs& a, std::size_t want) {
  PathSystem sys;
  if (!a.file.empty() && !a.inline_paths.empty()) throw ParseError("give either --paths FILE or --path, not both");
  if (!a.file.empty()) {
    Json doc;
    const std::string text = read_text_file(a.file);
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(a.file + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("paths") || !doc["paths"].is_array()) {
      throw ParseError(a.file + ": field 'paths': expected an array of label lists");
    }
    for (const auto& [k, v] : doc.items()) {
      if (k != "paths") throw ParseError(a.file + ": field '" + k + "': unknown field");
    }
    for (std::size_t i = 0; i < doc["paths"].size(); ++i) {
      const Json& p = doc["paths"][i];
      if (!p.is_array()) throw ParseError(a.file + ": field 'paths[" + std::to_string(i) + "]': expected a list");
      std::vector<std::string> labels;
      for (const auto& x : p) {
        if (!x.is_string()) throw ParseError(a.file + ": field 'paths[" + std::to_string(i) + "]': labels must be strings");
        labels.push_back(x.get<std::string>());
      }
      sys.paths.push_back(std::move(labels));
    }
  } else {
    for (const auto& spec : a.inline_paths) {
      std::vector<std::string> labels;
      std::stringstream ss(spec);
      std::string x;
      while (std::getline(ss, x, ',')) labels.push_back(x);
      sys.paths.push_back(std::move(labels));
    }
  }
  if (sys.paths.size() != want) {
    throw ParseError("expected " + std::to_string(want) + " paths, got " + std::to_string(sys.paths.size()));
  }
  try {
    realize(sys);
  } catch (const ContractError& e) {
    throw ParseError(e.what());
  }
  return sys;
}

void add_classify_options(CLI::App* cmd, ClassifyArgs& a) {
  cmd->add_option("--paths", a.file, "Path-system file (JSON: {\"paths\": [[labels...], ...]})");
  cmd->add_option("--path", a.inline_paths, "One path as comma-separated point labels (repeat per path)");
  add_common_options(cmd, a.common, {"text", "json", "dot"});
}

int run_classify2(const ClassifyArgs& a) {
  const PathSystem sys = load_system(a, 2);
  const auto orient = compatible_orientation_two(sys);
  Json doc;
  doc["compatible"] = orient.has_value();
  std::optional<MetricTwo> metric;
  bool verified = false;
  if (orient) {
    metric = construct_metric_two(sys, *orient);
    verified = check_fixed_weights(metric->realized.subdivided_paths, metric->weights,
                                   metric->realized.subdivided);
    doc["reverse_second"] = orient->second;
    doc["metric_verified"] = verified;
  }
  if (a.common.format == "dot") {
    const RealizedSystem r = metric ? metric->realized : realize(sys);
    emit(a.common, to_dot(r.subdivided, r.subdivided_paths,
                          metric ? std::optional<Weighting>(metric->weights) : std::nullopt, "paths"));
    return ok;
  }
  if (a.common.format == "json") {
    if (metric) doc["weights"] = weights_to_json(metric->weights, metric->realized.subdivided)["weights"];
    emit(a.common, doc.dump(2) + "\n");
    return ok;
  }
  std::ostringstream out;
  if (!orient) {
    out << "verdict: incompatible (no orientation agrees on all shared points; not geodesible)\n";
  } else {
    out << "verdict: compatible" << (orient->second ? " (second path reversed)" : "") << "\n";
    out << "metric: " << (verified ? "verified" : "FAILED verification") << "\n";
    out << "weights:\n";
    print_weights(out, metric->weights, metric->realized.subdivided);
  }
  emit(a.common, out.str());
  return ok;
}

int run_classify3(const ClassifyArgs& a) {
  const PathSystem sys = load_system(a, 3);
  const TripleVerdict v = classify_three(sys);
  const auto lp = check_admissible(sys, LPLimits{budgets_from_env().pivots});
  if (a.common.format == "dot") {
    const RealizedSystem r = realize(sys);
    emit(a.common, to_dot(r.subdivided, r.subdivided_paths, lp.witness, "paths"));
    return ok;
  }
  if (a.common.format == "json") {
    Json doc;
    doc["verdict"] = to_string(v);
    doc["admissible"] = lp.feasible;
    if (lp.witness) doc["weights"] = weights_to_json(*lp.witness, realize(sys).subdivided)["weights"];
    emit(a.common, doc.dump(2) + "\n");
    return ok;
  }
  std::ostringstream out;
  out << "verdict: " << to_string(v) << "\n";
  out << "lp: " << (lp.feasible ? "admissible" : "inadmissible") << "\n";
  emit(a.common, out.str());
  return ok;
}

// ---------------------------------------------------------------------------
// appendix-b

struct AtlasArgs {
  std::vector<int> groups;
  bool no_variants = false;
  bool diff = false;
  bool admissible_only = false;
  Common common;
};

int run_atlas(const AtlasArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<int> groups = a.groups.empty() ? std::vector<int>{1, 2} : a.groups;
  const LPLimits limits{budgets_from_env().pivots};
  std::ostringstream out;
  Json doc = Json::array();
  std::vector<std::string> mismatches;
  for (int group : groups) {
    std::vector<AtlasRow> rows;
    try {
      rows = enumerate_group(group, !a.no_variants || a.diff, limits);
    } catch (const LimitExceeded& e) {
      std::cerr << "budget exhausted: " << e.what() << "\n";
      return budget_failure;
    }
    if (a.diff) {
      for (const auto& m : diff_expected(group, rows)) mismatches.push_back("group " + std::to_string(group) + ": " + m);
    }
    std::size_t base = 0, admissible_base = 0;
    if (a.common.format == "text") out << "group " << group << "\n";
    for (const auto& r : rows) {
      const std::string variant = r.config.variant_name();
      if (variant == "distinct") {
        ++base;
        if (r.admissible) ++admissible_base;
      }
      if (a.admissible_only && !r.admissible) continue;
      const auto& ids = r.config.identifications;
      if (a.common.format == "text") {
        out << "  " << r.config.name << " " << variant << ": " << format_order(r.config.orders[0], ids)
            << " | " << format_order(r.config.orders[1], ids) << " | "
            << format_order(r.config.orders[2], ids) << " -> "
            << (r.admissible ? "admissible" : "inadmissible") << " (" << to_string(r.verdict) << ")\n";
      } else if (a.common.format == "json") {
        Json row;
        row["group"] = group;
        row["config"] = r.config.name;
        row["variant"] = variant;
        row["orders"] = Json::array();
        for (const auto& o : r.config.orders) row["orders"].push_back(format_order(o, ids));
        row["admissible"] = r.admissible;
        row["verdict"] = to_string(r.verdict);
        if (r.witness) {
          row["weights"] = weights_to_json(*r.witness, config_to_graph(r.config).subdivided)["weights"];
        }
        doc.push_back(std::move(row));
      } else if (r.admissible) {
        const RealizedSystem g = config_to_graph(r.config);
        out << to_dot(g.subdivided, g.subdivided_paths, r.witness,
                      "group " + std::to_string(group) + " " + r.config.name + " " + variant);
      }
    }
    if (a.common.format == "text") {
      out << "  base configurations: " << base << ", admissible with distinct points: " << admissible_base
          << "\n";
    }
  }
  if (a.common.format == "json") out << doc.dump(2) << "\n";
  if (a.diff) {
    if (a.common.format == "text") out << "paper diff: " << (mismatches.empty() ? "match" : "MISMATCH") << "\n";
    for (const auto& m : mismatches) std::cerr << "mismatch: " << m << "\n";
  }
  if (a.common.timing && a.common.format == "text") {
    out << "time: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
  }
  emit(a.common, out.str());
  return a.diff && !mismatches.empty() ? diff_mismatch : ok;
}

// ---------------------------------------------------------------------------
// export-dot

struct DotArgs {
  GraphSource src;
  std::string cover_file, weights_file, output;
};

int run_export_dot(const DotArgs& a) {
  const Multigraph g = load_graph(a.src);
  const SubdividedGraph sg = two_subdivision(g);
  std::vector<PathSeq> paths;
  std::optional<Weighting> w;
  if (!a.cover_file.empty()) {
    try {
      paths = parse_cover(read_text_file(a.cover_file), sg);
    } catch (const ParseError& e) {
      throw ParseError(a.cover_file + ": " + e.what());
    }
  }
  if (!a.weights_file.empty()) {
    try {
      w = parse_weights(read_text_file(a.weights_file), sg);
    } catch (const ParseError& e) {
      throw ParseError(a.weights_file + ": " + e.what());
    }
  }
  Common c;
  c.output = a.output;
  emit(c, to_dot(sg, paths, w));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "geocover: smallest covers of a multigraph by shortest paths under positive edge lengths.\n"
      "Budgets may also be set with GEOCOVER_BUDGET=\"nodes=N,pivots=N,pool=N,size=M\"; flags win.\n"
      "Exit codes: 0 success, 1 contract error (e.g. cover misses a segment), 2 parse error,\n"
      "3 budget exhausted, 4 mismatch against the expected appendix sets."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "geocover 0.1.0");

  CoverArgs number_args, distinct_args;
  auto* number = app.add_subcommand("number", "Compute the cover number with a witness cover and weights");
  add_cover_options(number, number_args, false);
  auto* distinct = app.add_subcommand(
      "distinct", "List optimal covers up to symmetry and rerouting moves, one witness per class");
  add_cover_options(distinct, distinct_args, true);

  FeasibleArgs feasible_args;
  auto* feasible = app.add_subcommand("feasible", "Decide whether a given cover can consist of shortest paths");
  add_graph_options(feasible, feasible_args.src);
  add_common_options(feasible, feasible_args.common, {"text", "json"});
  feasible->add_option("--cover", feasible_args.cover_file, "Cover file (JSON: paths by vertex names)")
      ->required();
  feasible->add_option("--check-weights", feasible_args.weights_file,
                       "Check this weighting (JSON) instead of solving for one");
  feasible->add_flag("--unit", feasible_args.unweighted, "Check the all-ones weighting instead of solving");
  feasible->add_flag("--normalize", feasible_args.common.normalize, "Scale the witness so the smallest weight is 1");
  feasible->add_option("--max-pivots", feasible_args.pivots, "Simplex pivot budget")->check(CLI::PositiveNumber);

  ClassifyArgs c2_args, c3_args;
  auto* classify2 = app.add_subcommand(
      "classify2", "Two abstract paths: compatible orientations and an explicit metric making both geodesics");
  add_classify_options(classify2, c2_args);
  auto* classify3 = app.add_subcommand(
      "classify3", "Three abstract paths: partial-order, exceptional-2a/2b or not-geodesible, checked by LP");
  add_classify_options(classify3, c3_args);

  AtlasArgs atlas_args;
  auto* atlas = app.add_subcommand("appendix-b", "Check every three-geodesic overlap configuration by LP");
  atlas->add_option("--group", atlas_args.groups, "Configuration group, 1 or 2 (default: both)")
      ->check(CLI::IsMember({1, 2}));
  atlas->add_flag("--no-variants", atlas_args.no_variants, "Skip configurations with identified points (ignored with --diff-paper)");
  atlas->add_flag("--admissible-only", atlas_args.admissible_only, "List admissible rows only");
  atlas->add_flag("--diff-paper", atlas_args.diff,
                  "Compare with the expected admissible sets; exit 4 on any difference");
  add_common_options(atlas, atlas_args.common, {"text", "json", "dot"});

  DotArgs dot_args;
  auto* export_dot = app.add_subcommand("export-dot", "Draw the 2-subdivision, optionally with a colored cover");
  add_graph_options(export_dot, dot_args.src);
  export_dot->add_option("--cover", dot_args.cover_file, "Cover file to color");
  export_dot->add_option("--weights", dot_args.weights_file, "Weights file for edge labels");
  export_dot->add_option("-o,--output", dot_args.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parse_failure;
  }

  try {
    if (*number) return run_cover(number_args, false);
    if (*distinct) return run_cover(distinct_args, true);
    if (*feasible) return run_feasible(feasible_args);
    if (*classify2) return run_classify2(c2_args);
    if (*classify3) return run_classify3(c3_args);
    if (*atlas) return run_atlas(atlas_args);
    if (*export_dot) return run_export_dot(dot_args);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse_failure;
  } catch (const LimitExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return budget_failure;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failure;
  }
  return failure;
}
