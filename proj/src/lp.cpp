#include "geocover/lp.hpp"

#include <algorithm>
#include <map>

#include "geocover/errors.hpp"

namespace geocover {

LPProgram build_feasibility_program(const Cover& c, const PathPool& pool) {
  LPProgram prog;
  prog.num_vars = static_cast<int>(pool.num_segments());
  for (int gi : c) {
    const PathSeq& g = pool.path(gi);
    for (int pi : pool.with_endpoints(g.front(), g.back())) {
      if (pi == gi) continue;
      std::map<int, int> coeff;
      for (EdgeId s : g.edges) ++coeff[s];
      for (EdgeId s : pool.path(pi).edges) --coeff[s];
      LPConstraint row;
      for (auto [var, k] : coeff) {
        if (k != 0) row.terms.emplace_back(var, k);
      }
      prog.constraints.push_back(std::move(row));
    }
  }
  return prog;
}

bool satisfies(const LPProgram& p, const Weighting& w) {
  if (w.weight.size() != static_cast<std::size_t>(p.num_vars)) return false;
  for (const auto& x : w.weight) {
    if (x < 1) return false;
  }
  for (const auto& row : p.constraints) {
    Rational lhs = 0;
    for (auto [var, k] : row.terms) lhs += k * w.weight[static_cast<std::size_t>(var)];
    if (sgn(lhs) > 0) return false;
  }
  return true;
}

namespace {

void validate(const LPProgram& p) {
  if (p.num_vars < 0) throw ContractError("negative variable count");
  for (const auto& row : p.constraints) {
    for (auto [var, k] : row.terms) {
      (void)k;
      if (var < 0 || var >= p.num_vars) throw ContractError("constraint references unknown variable");
    }
  }
}

}  // namespace

// The system w >= 1, C w <= 0 is infeasible exactly when
//   max (C 1)^T y  s.t.  C^T y >= 0,  1^T y <= 1,  y >= 0
// is positive. That program starts feasible at y = 0, so a single phase
// suffices, and at a zero optimum the duals u of the first block give the
// weighting w = u + 1.
FeasibilityResult solve_feasibility(const LPProgram& p, LPLimits limits) {
  validate(p);
  FeasibilityResult result;
  const auto n = static_cast<std::size_t>(p.num_vars);
  const std::size_t m = p.constraints.size();

  Weighting ones = Weighting::uniform(n, 1);
  if (satisfies(p, ones)) {
    result.feasible = true;
    result.witness = std::move(ones);
    return result;
  }

  const std::size_t rows = n + 1;
  const std::size_t cols = m + n + 1;  // y, slack per variable row, slack of 1^T y <= 1
  const std::size_t rhs = cols;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1));
  std::vector<Rational> z(cols + 1);
  for (std::size_t k = 0; k < m; ++k) {
    Rational ck = 0;
    for (auto [var, coeff] : p.constraints[k].terms) {
      t[static_cast<std::size_t>(var)][k] = -coeff;
      ck += coeff;
    }
    t[n][k] = 1;
    z[k] = -ck;
  }
  for (std::size_t i = 0; i < n; ++i) t[i][m + i] = 1;
  t[n][m + n] = 1;
  t[n][rhs] = 1;
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = m + i;

  Rational ratio, best;
  std::vector<std::size_t> nz;
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(z[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = rows;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      ratio = t[i][rhs] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) throw ContractError("feasibility dual is unbounded");
    if (++result.pivots > limits.max_pivots) {
      throw LimitExceeded("simplex exceeded " + std::to_string(limits.max_pivots) + " pivots");
    }

    auto& prow = t[leave];
    const Rational piv = prow[enter];
    nz.clear();
    for (std::size_t j = 0; j <= cols; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] /= piv;
        nz.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (sgn(row[enter]) == 0) return;
      const Rational f = row[enter];
      for (std::size_t j : nz) row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != leave) eliminate(t[i]);
    }
    eliminate(z);
    basis[leave] = enter;
  }

  if (sgn(z[rhs]) > 0) return result;

  Weighting w;
  w.weight.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.weight[i] = z[m + i] + 1;
  if (!satisfies(p, w)) throw ContractError("simplex produced an invalid witness");
  result.feasible = true;
  result.witness = std::move(w);
  return result;
}

bool check_fixed_weights(std::span<const PathSeq> paths, const Weighting& w,
                         const SubdividedGraph& sg) {
  if (w.weight.size() != sg.num_segments()) throw ContractError("weighting size mismatch");
  if (!w.all_positive()) throw ContractError("weights must be positive");
  std::map<VertexId, std::vector<Distance>> cache;
  for (const auto& p : paths) {
    auto it = cache.find(p.front());
    if (it == cache.end()) {
      it = cache.emplace(p.front(), shortest_path_lengths_from(sg.graph, w, p.front())).first;
    }
    const Distance& d = it->second[static_cast<std::size_t>(p.back())];
    if (!d || path_length(p, w) != *d) return false;
  }
  return true;
}

bool check_fixed_weights(const Cover& c, const Weighting& w, const PathPool& pool) {
  std::vector<PathSeq> paths;
  for (int i : c) paths.push_back(pool.path(i));
  return check_fixed_weights(paths, w, pool.graph());
}

Weighting normalize(const Weighting& w) {
  if (w.weight.empty()) return w;
  const Rational lo = *std::min_element(w.weight.begin(), w.weight.end());
  Weighting out = w;
  for (auto& x : out.weight) x /= lo;
  return out;
}

std::vector<std::pair<std::string, std::string>> format_witness(const Weighting& w,
                                                                const SubdividedGraph& sg) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t s = 0; s < w.weight.size(); ++s) {
    out.emplace_back(sg.segment_name(static_cast<EdgeId>(s)), to_fraction_string(w.weight[s]));
  }
  return out;
}

}  // namespace geocover
