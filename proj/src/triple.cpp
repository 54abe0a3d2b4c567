#include "geocover/triple.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "geocover/cover.hpp"
#include "geocover/errors.hpp"

namespace geocover {

using Labels = std::vector<std::string>;

std::vector<std::string> PathSystem::oriented(std::size_t i) const {
  Labels out = paths.at(i);
  if (i < reversed.size() && reversed[i]) std::reverse(out.begin(), out.end());
  return out;
}

namespace {

void validate(const PathSystem& sys) {
  for (const auto& p : sys.paths) {
    std::set<std::string> seen;
    for (const auto& x : p) {
      if (x.empty()) throw ContractError("empty point label");
      if (!seen.insert(x).second) throw ContractError("label '" + x + "' repeats on one path");
    }
  }
  if (!sys.reversed.empty() && sys.reversed.size() != sys.paths.size()) {
    throw ContractError("orientation flags do not match the number of paths");
  }
}

bool contains(const Labels& p, const std::string& x) {
  return std::find(p.begin(), p.end(), x) != p.end();
}

// Points of a that also lie on b, in a's order.
Labels shared_in_order(const Labels& a, const Labels& b) {
  Labels out;
  for (const auto& x : a) {
    if (contains(b, x)) out.push_back(x);
  }
  return out;
}

bool compatible(const Labels& a, const Labels& b) {
  return shared_in_order(a, b) == shared_in_order(b, a);
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  std::string name = base;
  while (taken.count(name)) name += "'";
  return name;
}

}  // namespace

PathSeq subdivide_path(const PathSeq& p, const SubdividedGraph& sg) {
  PathSeq q;
  q.vertices.push_back(p.vertices.front());
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const EdgeId e = p.edges[i];
    const bool forward = sg.origin.edge(e).u == p.vertices[i];
    q.edges.push_back(forward ? 2 * e : 2 * e + 1);
    q.vertices.push_back(sg.midpoint_of[static_cast<std::size_t>(e)]);
    q.edges.push_back(forward ? 2 * e + 1 : 2 * e);
    q.vertices.push_back(p.vertices[i + 1]);
  }
  return canonical(q);
}

RealizedSystem realize(const PathSystem& sys) {
  validate(sys);
  RealizedSystem r;
  std::map<std::string, VertexId> id;
  std::set<std::string> taken;
  for (const auto& p : sys.paths) taken.insert(p.begin(), p.end());
  for (const auto& p : sys.paths) {
    for (const auto& x : p) {
      if (!id.count(x)) id[x] = r.graph.add_vertex(x);
    }
  }
  for (std::size_t i = 0; i < sys.paths.size(); ++i) {
    const std::string tag = std::to_string(i + 1);
    const std::string s = fresh_name("start" + tag, taken);
    taken.insert(s);
    const std::string t = fresh_name("end" + tag, taken);
    taken.insert(t);
    PathSeq p;
    p.vertices.push_back(r.graph.add_vertex(s));
    for (const auto& x : sys.paths[i]) p.vertices.push_back(id.at(x));
    p.vertices.push_back(r.graph.add_vertex(t));
    for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
      p.edges.push_back(r.graph.add_edge(p.vertices[k], p.vertices[k + 1]));
    }
    r.paths.push_back(std::move(p));
  }
  r.subdivided = two_subdivision(r.graph);
  for (const auto& p : r.paths) r.subdivided_paths.push_back(subdivide_path(p, r.subdivided));
  return r;
}

std::optional<std::pair<bool, bool>> compatible_orientation_two(const PathSystem& sys) {
  validate(sys);
  if (sys.paths.size() != 2) throw ContractError("expected a two-path system");
  const Labels& a = sys.paths[0];
  Labels b = sys.paths[1];
  if (compatible(a, b)) return std::pair{false, false};
  std::reverse(b.begin(), b.end());
  if (compatible(a, b)) return std::pair{false, true};
  return std::nullopt;
}

MetricTwo construct_metric_two(const PathSystem& sys, std::pair<bool, bool> orientation) {
  if (sys.paths.size() != 2) throw ContractError("expected a two-path system");
  PathSystem o = sys;
  o.reversed = {orientation.first, orientation.second};
  const Labels a = o.oriented(0), b = o.oriented(1);
  if (!compatible(a, b)) throw ContractError("orientations are not compatible");

  MetricTwo out;
  out.realized = realize(sys);
  const auto& g = out.realized.graph;
  out.weights = Weighting::uniform(out.realized.subdivided.num_segments(), 1);
  const Labels common = shared_in_order(a, b);

  for (std::size_t i = 0; i < 2; ++i) {
    // Realized path i runs start, points as listed, end; walk it in the
    // chosen orientation.
    PathSeq p = out.realized.paths[i];
    if (o.reversed[i]) p = reversed(p);
    std::vector<std::size_t> marks;  // positions of shared points on p
    for (std::size_t k = 0; k < p.vertices.size(); ++k) {
      if (std::find(common.begin(), common.end(), g.name(p.vertices[k])) != common.end()) {
        marks.push_back(k);
      }
    }
    // Free arcs keep length 1 (segments 1/2 each); arcs between consecutive
    // shared points split a unit stretch evenly.
    for (std::size_t k = 0; k < p.edges.size(); ++k) {
      Rational len = 1;
      for (std::size_t m = 0; m + 1 < marks.size(); ++m) {
        if (k >= marks[m] && k < marks[m + 1]) {
          len = Rational(1, static_cast<unsigned long>(marks[m + 1] - marks[m]));
        }
      }
      const EdgeId e = p.edges[k];
      out.weights.weight[static_cast<std::size_t>(2 * e)] = len / 2;
      out.weights.weight[static_cast<std::size_t>(2 * e + 1)] = len / 2;
    }
  }
  return out;
}

std::string to_string(TripleVerdict v) {
  switch (v) {
    case TripleVerdict::partial_order: return "partial-order";
    case TripleVerdict::exceptional_2a: return "exceptional-2a";
    case TripleVerdict::exceptional_2b: return "exceptional-2b";
    case TripleVerdict::not_geodesible: return "not-geodesible";
  }
  return "?";
}

namespace {

// Union of the three path orders has no directed cycle.
bool acyclic_union(const std::array<Labels, 3>& p) {
  std::map<std::string, std::set<std::string>> succ;
  std::map<std::string, int> indeg;
  for (const auto& path : p) {
    for (const auto& x : path) indeg.emplace(x, 0);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      if (succ[path[k]].insert(path[k + 1]).second) ++indeg[path[k + 1]];
    }
  }
  std::vector<std::string> ready;
  for (const auto& [x, d] : indeg) {
    if (d == 0) ready.push_back(x);
  }
  std::size_t done = 0;
  while (!ready.empty()) {
    const std::string x = ready.back();
    ready.pop_back();
    ++done;
    for (const auto& y : succ[x]) {
      if (--indeg[y] == 0) ready.push_back(y);
    }
  }
  return done == indeg.size();
}

// Points of X3 lying on X1 or X2, in X3's order.
Labels along_third(const std::array<Labels, 3>& x) {
  Labels out;
  for (const auto& y : x[2]) {
    if (contains(x[0], y) || contains(x[1], y)) out.push_back(y);
  }
  return out;
}

bool subset_of(const Labels& xs, const std::set<std::string>& s) {
  return std::all_of(xs.begin(), xs.end(), [&](const std::string& x) { return s.count(x) > 0; });
}

// Case 2a for the roles as given: all pairs compatible, X1∩X3 inside the
// part of X1 after its last point on X2, X2∩X3 inside the part of X2 before
// its first point on X1.
bool matches_2a(const std::array<Labels, 3>& x) {
  if (!compatible(x[0], x[1]) || !compatible(x[0], x[2]) || !compatible(x[1], x[2])) return false;
  std::set<std::string> u, v;
  for (auto it = x[0].rbegin(); it != x[0].rend() && !contains(x[1], *it); ++it) u.insert(*it);
  for (auto it = x[1].begin(); it != x[1].end() && !contains(x[0], *it); ++it) v.insert(*it);
  const Labels c13 = shared_in_order(x[0], x[2]);
  const Labels c23 = shared_in_order(x[1], x[2]);
  if (!subset_of(c13, u) || !subset_of(c23, v)) return false;
  // X3 crosses U's zone before V's zone; the other way round is a partial order.
  Labels expect = c13;
  expect.insert(expect.end(), c23.begin(), c23.end());
  return along_third(x) == expect;
}

// Order on X1 ∪ X2 induced by the two (compatible) path orders. Every open
// arc between consecutive points is a node of its own, so components that
// hold no labeled point still have an element.
class TwoPathOrder {
 public:
  TwoPathOrder(const Labels& a, const Labels& b) {
    add_path(a, 0);
    add_path(b, 1);
    const std::size_t n = names_.size();
    reach_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) reach_[i][i] = true;
    for (auto [s, t] : arcs_) reach_[s][t] = true;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!reach_[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (reach_[k][j]) reach_[i][j] = true;
        }
      }
    }
  }

  // Nodes of path `which` strictly between shared points lo and hi (either
  // may be empty for the open end).
  std::vector<std::size_t> between(int which, const std::string& lo, const std::string& hi) const {
    const auto& seq = seq_[static_cast<std::size_t>(which)];
    std::size_t from = 0, to = seq.size();
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (!lo.empty() && names_[seq[k]] == lo) from = k + 1;
      if (!hi.empty() && names_[seq[k]] == hi) to = k;
    }
    return {seq.begin() + static_cast<std::ptrdiff_t>(from),
            seq.begin() + static_cast<std::ptrdiff_t>(to)};
  }

  // Every element of hi is >= every element of lo.
  bool dominates(const std::vector<std::size_t>& hi, const std::vector<std::size_t>& lo) const {
    for (auto h : hi) {
      for (auto l : lo) {
        if (!reach_[l][h]) return false;
      }
    }
    return true;
  }

 private:
  void add_path(const Labels& p, int which) {
    auto& seq = seq_[static_cast<std::size_t>(which)];
    auto arc = [&] {
      names_.push_back({});
      return names_.size() - 1;
    };
    seq.push_back(arc());
    for (const auto& x : p) {
      auto it = index_.find(x);
      if (it == index_.end()) {
        it = index_.emplace(x, names_.size()).first;
        names_.push_back(x);
      }
      seq.push_back(it->second);
      seq.push_back(arc());
    }
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) arcs_.emplace_back(seq[k], seq[k + 1]);
  }

  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::array<std::vector<std::size_t>, 2> seq_;
  std::vector<std::pair<std::size_t, std::size_t>> arcs_;
  std::vector<std::vector<bool>> reach_;
};

// Case 2b for the roles as given: X1,X2 and X1,X3 compatible, X2,X3 not;
// noncomparable components U of X1\X2 and V of X2\X1 closing at the same
// shared point e, with X1∩X3 ⊂ U∪{e} and X2∩X3 ⊂ V∪{e}.
bool matches_2b(const std::array<Labels, 3>& x) {
  if (!compatible(x[0], x[1]) || !compatible(x[0], x[2]) || compatible(x[1], x[2])) return false;
  const Labels common = shared_in_order(x[0], x[1]);
  const Labels c13 = shared_in_order(x[0], x[2]);
  const Labels c23 = shared_in_order(x[1], x[2]);
  const TwoPathOrder order(x[0], x[1]);

  // Labels strictly between lo and hi along path p.
  auto span_labels = [](const Labels& p, const std::string& lo, const std::string& hi) {
    std::set<std::string> out;
    bool on = lo.empty();
    for (const auto& y : p) {
      if (y == hi) break;
      if (on) out.insert(y);
      if (y == lo) on = true;
    }
    return out;
  };
  auto previous_on = [&](const Labels& p, const std::string& e) {
    std::string prev;
    for (const auto& y : p) {
      if (y == e) break;
      if (std::find(common.begin(), common.end(), y) != common.end()) prev = y;
    }
    return prev;
  };

  // Degenerate form without a common closing point: U is the last end
  // component of X1\X2, V the first end component of X2\X1, and X3 runs
  // along U and then outwards along V, against X2.
  {
    std::set<std::string> u, v;
    for (auto it = x[0].rbegin(); it != x[0].rend() && !contains(x[1], *it); ++it) u.insert(*it);
    for (auto it = x[1].begin(); it != x[1].end() && !contains(x[0], *it); ++it) v.insert(*it);
    Labels expect = c13;
    expect.insert(expect.end(), c23.rbegin(), c23.rend());
    if (!common.empty() && subset_of(c13, u) && subset_of(c23, v) && along_third(x) == expect) {
      return true;
    }
  }

  for (const auto& e : common) {
    const std::string lo1 = previous_on(x[0], e);
    const std::string lo2 = previous_on(x[1], e);
    const auto un = order.between(0, lo1, e);
    const auto vn = order.between(1, lo2, e);
    if (order.dominates(un, vn) || order.dominates(vn, un)) continue;
    auto u = span_labels(x[0], lo1, e);
    auto v = span_labels(x[1], lo2, e);
    u.insert(e);
    v.insert(e);
    if (!subset_of(c13, u) || !subset_of(c23, v)) continue;
    // X3 runs along U into e and then back down V, against X2.
    Labels expect;
    for (const auto& y : c13) {
      if (y != e) expect.push_back(y);
    }
    if (contains(x[2], e)) expect.push_back(e);
    for (auto it = c23.rbegin(); it != c23.rend(); ++it) {
      if (*it != e) expect.push_back(*it);
    }
    if (along_third(x) == expect) return true;
  }
  return false;
}

}  // namespace

TripleVerdict classify_three(const PathSystem& sys) {
  validate(sys);
  if (sys.paths.size() != 3) throw ContractError("expected a three-path system");

  // Global reversal maps a compatible order to its reverse, so X1 stays forward.
  for (int mask = 0; mask < 4; ++mask) {
    std::array<Labels, 3> p = {sys.paths[0], sys.paths[1], sys.paths[2]};
    if (mask & 1) std::reverse(p[1].begin(), p[1].end());
    if (mask & 2) std::reverse(p[2].begin(), p[2].end());
    if (compatible(p[0], p[1]) && compatible(p[0], p[2]) && compatible(p[1], p[2]) &&
        acyclic_union(p)) {
      return TripleVerdict::partial_order;
    }
  }

  std::array<int, 3> roles = {0, 1, 2};
  for (const auto verdict : {TripleVerdict::exceptional_2a, TripleVerdict::exceptional_2b}) {
    do {
      for (int mask = 0; mask < 8; ++mask) {
        std::array<Labels, 3> x;
        for (int k = 0; k < 3; ++k) {
          x[static_cast<std::size_t>(k)] = sys.paths[static_cast<std::size_t>(roles[static_cast<std::size_t>(k)])];
          if (mask & (1 << k)) std::reverse(x[static_cast<std::size_t>(k)].begin(), x[static_cast<std::size_t>(k)].end());
        }
        const bool hit = verdict == TripleVerdict::exceptional_2a ? matches_2a(x) : matches_2b(x);
        if (hit) return verdict;
      }
    } while (std::next_permutation(roles.begin(), roles.end()));
  }
  return TripleVerdict::not_geodesible;
}

FeasibilityResult check_admissible(const PathSystem& sys, LPLimits limits) {
  const RealizedSystem r = realize(sys);
  const PathPool pool(r.subdivided);
  Cover c;
  for (const auto& p : r.subdivided_paths) c.push_back(*pool.find(p));
  std::sort(c.begin(), c.end());
  return solve_feasibility(build_feasibility_program(c, pool), limits);
}

// ---------------------------------------------------------------------------
// Configurations

namespace {

std::string class_name(std::vector<std::string> members) {
  std::sort(members.begin(), members.end());
  std::string out;
  for (const auto& m : members) out += (out.empty() ? "" : "=") + m;
  return out;
}

// Union-find over labels; class names list the sorted members.
std::map<std::string, std::string> merge_labels(const TripleConfig& cfg) {
  std::map<std::string, std::string> parent;
  for (const auto& o : cfg.orders) {
    for (const auto& x : o.labels) parent.emplace(x, x);
  }
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    const std::string p = parent.at(x);
    return p == x ? x : parent[x] = find(p);
  };
  for (const auto& [a, b] : cfg.identifications) {
    if (!parent.count(a) || !parent.count(b)) {
      throw ContractError("identification names unknown label " + (parent.count(a) ? b : a));
    }
    parent[find(a)] = find(b);
  }
  std::map<std::string, std::vector<std::string>> members;
  for (const auto& [x, p] : parent) members[find(x)].push_back(x);
  std::map<std::string, std::string> out;
  for (const auto& [root, ms] : members) {
    for (const auto& m : ms) out[m] = class_name(ms);
  }
  return out;
}

bool identified(const TripleConfig& cfg, const std::string& a, const std::string& b) {
  for (const auto& [x, y] : cfg.identifications) {
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

}  // namespace

std::string TripleConfig::variant_name() const {
  if (identifications.empty()) return "distinct";
  std::set<std::string> classes;
  for (const auto& [label, cls] : merge_labels(*this)) {
    if (cls.find('=') != std::string::npos) classes.insert(cls);
  }
  std::string out;
  for (const auto& c : classes) out += (out.empty() ? "" : ",") + c;
  return out;
}

TripleConfig parse_config(int group, std::string name, const std::string& text) {
  TripleConfig cfg;
  cfg.group = group;
  cfg.name = std::move(name);
  std::size_t chain = 0;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("configuration '" + text + "', column " + std::to_string(i + 1) + ": " + why);
  };
  bool want_label = true;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ') {
      ++i;
    } else if (ch == '|') {
      if (want_label) fail("expected a label");
      if (++chain == 3) fail("more than three orders");
      ++i;
      want_label = true;
    } else if (ch == '<') {
      if (want_label) fail("expected a label");
      const bool weak = i + 1 < text.size() && text[i + 1] == '=';
      cfg.orders[chain].weak.push_back(weak);
      i += weak ? 2 : 1;
      want_label = true;
    } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      if (!want_label) fail("expected '<', '<=' or '|'");
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      cfg.orders[chain].labels.push_back(text.substr(i, j - i));
      i = j;
      want_label = false;
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
  }
  if (want_label) fail("expected a label");
  if (chain != 2) fail("expected three orders separated by '|'");
  return cfg;
}

std::string format_order(const PointOrder& o,
                         const std::vector<std::pair<std::string, std::string>>& ids) {
  TripleConfig probe;
  probe.identifications = ids;
  std::string out;
  for (std::size_t k = 0; k < o.labels.size(); ++k) {
    if (k > 0) {
      const bool eq = identified(probe, o.labels[k - 1], o.labels[k]);
      out += eq ? "=" : (o.weak[k - 1] ? "<=" : "<");
    }
    out += o.labels[k];
  }
  return out;
}

PathSystem config_to_system(const TripleConfig& cfg) {
  const auto cls = merge_labels(cfg);
  PathSystem sys;
  for (const auto& o : cfg.orders) {
    Labels path;
    for (std::size_t k = 0; k < o.labels.size(); ++k) {
      const std::string& c = cls.at(o.labels[k]);
      if (k > 0 && cls.at(o.labels[k - 1]) == c) {
        if (!o.weak[k - 1] || !identified(cfg, o.labels[k - 1], o.labels[k])) {
          throw ContractError("identifications contradict the order " +
                              format_order(o, cfg.identifications));
        }
        continue;
      }
      if (contains(path, c)) {
        throw ContractError("identified point " + c + " would repeat on one path");
      }
      path.push_back(c);
    }
    sys.paths.push_back(std::move(path));
  }
  sys.reversed.assign(3, false);
  return sys;
}

RealizedSystem config_to_graph(const TripleConfig& cfg) { return realize(config_to_system(cfg)); }

FeasibilityResult check_admissible(const TripleConfig& cfg, LPLimits limits) {
  return check_admissible(config_to_system(cfg), limits);
}

namespace {

// Group 1: points a, b, e, f on X1; b, c, f on X2; a, c, e on X3.
constexpr const char* kGroup1[] = {
    "a<b<e<=f | b<c<f | c<a<e",  // 1
    "a<b<e<=f | b<f<c | c<a<e",  // 2
    "a<b<f<=e | b<c<f | c<a<e",  // 3
    "a<b<f<=e | b<f<c | c<a<e",  // 4
    "a<e<b<f | b<c<f | c<a<e",   // 5
    "a<e<b<f | b<f<c | c<a<e",   // 6
    "a<e<=f<b | f<b<c | c<a<e",  // 7
    "a<f<b<e | f<b<c | c<a<e",   // 8
    "a<f<=e<b | f<b<c | c<a<e",  // 9
    "e<a<b<f | b<c<f | c<e<a",   // 10
    "e<a<b<f | b<c<f | e<c<a",   // 11
    "e<a<b<f | b<f<c | c<e<a",   // 12
    "e<a<b<f | b<f<c | e<c<a",   // 13
    "e<a<f<b | f<b<c | c<e<a",   // 14
    "e<a<f<b | f<b<c | e<c<a",   // 15
    "e<=f<a<b | f<b<c | c<e<a",  // 16
    "e<=f<a<b | f<b<c | e<c<a",  // 17: e and c cannot coincide, c is off X1
    "f<a<b<e | f<b<c | c<a<e",   // 18
    "f<a<e<b | f<b<c | c<a<e",   // 19: X3 read as c<a<e
    "f<=e<a<b | f<b<c | c<e<a",  // 20
    "f<=e<a<b | f<b<c | e<c<a",  // 21
};

// Group 2: points c, e, f, g on X1; a, b, c, e on X2; f, g, b, a on X3.
constexpr std::pair<const char*, const char*> kGroup2X1[] = {
    {"1a", "c<e<=f<g"}, {"1b", "c<=f<=e<=g"}, {"1c", "c<=f<g<=e"},
    {"1d", "f<g<=c<e"}, {"1e", "f<=c<=g<=e"}, {"1f", "f<=c<e<=g"},
};
constexpr std::pair<const char*, const char*> kGroup2X2[] = {
    {"2a", "a<b<=c<e"}, {"2b", "a<=c<=b<=e"}, {"2c", "a<=c<e<=b"},
    {"2d", "c<e<=a<b"}, {"2e", "c<=a<=e<=b"}, {"2f", "c<=a<b<=e"},
};
constexpr std::pair<const char*, const char*> kGroup2X3[] = {
    {"3a", "f<g<=b<a"}, {"3b", "f<=b<=g<=a"}, {"3c", "f<=b<a<=g"},
};

}  // namespace

std::vector<TripleConfig> base_configs(int group) {
  std::vector<TripleConfig> out;
  if (group == 1) {
    int k = 0;
    for (const char* text : kGroup1) out.push_back(parse_config(1, std::to_string(++k), text));
  } else if (group == 2) {
    for (const auto& [n1, t1] : kGroup2X1) {
      for (const auto& [n2, t2] : kGroup2X2) {
        for (const auto& [n3, t3] : kGroup2X3) {
          out.push_back(parse_config(2, std::string(n1) + "/" + n2 + "/" + n3,
                                     std::string(t1) + " | " + t2 + " | " + t3));
        }
      }
    }
  } else {
    throw ContractError("group must be 1 or 2");
  }
  return out;
}

std::vector<TripleConfig> degenerate_variants(const TripleConfig& cfg) {
  struct Link {
    std::size_t chain, pos;
  };
  std::vector<Link> links;
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t k = 0; k < cfg.orders[c].weak.size(); ++k) {
      if (cfg.orders[c].weak[k]) links.push_back({c, k});
    }
  }
  std::vector<TripleConfig> out;
  std::set<std::map<std::string, std::string>> seen;
  const std::size_t n = links.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    bool adjacent = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((mask >> i & 1) && (mask >> j & 1) && links[i].chain == links[j].chain &&
            links[j].pos == links[i].pos + 1) {
          adjacent = true;
        }
      }
    }
    if (adjacent) continue;
    TripleConfig v = cfg;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      const auto& o = cfg.orders[links[i].chain];
      v.identifications.emplace_back(o.labels[links[i].pos], o.labels[links[i].pos + 1]);
    }
    try {
      config_to_system(v);
    } catch (const ContractError&) {
      continue;
    }
    if (seen.insert(merge_labels(v)).second) out.push_back(std::move(v));
  }
  return out;
}

std::vector<AtlasRow> enumerate_group(int group, bool with_variants, LPLimits limits) {
  std::vector<AtlasRow> rows;
  auto add = [&](const TripleConfig& cfg) {
    AtlasRow row;
    row.config = cfg;
    auto r = check_admissible(cfg, limits);
    row.admissible = r.feasible;
    row.witness = std::move(r.witness);
    row.verdict = classify_three(config_to_system(cfg));
    rows.push_back(std::move(row));
  };
  for (const auto& cfg : base_configs(group)) {
    add(cfg);
    if (with_variants) {
      for (const auto& v : degenerate_variants(cfg)) add(v);
    }
  }
  return rows;
}

std::vector<std::pair<std::string, std::string>> expected_admissible(int group) {
  if (group == 1) {
    return {{"6", "distinct"}, {"7", "distinct"}, {"9", "e=f"}, {"12", "distinct"},
            {"14", "distinct"}};
  }
  if (group == 2) {
    return {{"1a/2a/3a", "distinct"}, {"1a/2d/3a", "distinct"}, {"1c/2f/3a", "distinct"},
            {"1d/2a/3a", "distinct"}, {"1d/2d/3a", "distinct"}, {"1f/2a/3c", "distinct"},
            {"1f/2d/3c", "distinct"}};
  }
  throw ContractError("group must be 1 or 2");
}

std::vector<std::string> diff_expected(int group, const std::vector<AtlasRow>& rows) {
  const auto expected = expected_admissible(group);
  std::vector<std::string> out;
  std::size_t base = 0;
  for (const auto& r : rows) {
    const std::string variant = r.config.variant_name();
    if (variant == "distinct") ++base;
    if (group == 2 && variant != "distinct") continue;
    if (group == 1 && r.config.name == "7" && variant == "e=f") continue;
    const bool want = std::find(expected.begin(), expected.end(),
                                std::pair{r.config.name, variant}) != expected.end();
    if (want != r.admissible) {
      out.push_back(r.config.name + " (" + variant + "): expected " +
                    (want ? "admissible" : "inadmissible") + ", computed " +
                    (r.admissible ? "admissible" : "inadmissible"));
    }
  }
  const std::size_t want_base = group == 1 ? 21 : 108;
  if (base != want_base) {
    out.push_back(std::to_string(base) + " base configurations, expected " +
                  std::to_string(want_base));
  }
  for (const auto& [name, variant] : expected) {
    const bool present = std::any_of(rows.begin(), rows.end(), [&](const AtlasRow& r) {
      return r.config.name == name && r.config.variant_name() == variant;
    });
    if (!present) out.push_back(name + " (" + variant + "): row missing");
  }
  return out;
}

}  // namespace geocover
