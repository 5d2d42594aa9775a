#pragma once

// Eventual structure of h-fold sumsets of a normalized set A (min 0,
// gcd 1, max a*): for all large h,
//
//   hA = Cset ∪ [C, h·a* − D] ∪ (h·a* − Dset)
//
// with constants C, D and finite fringe sets Cset ⊆ [0, C−2],
// Dset ⊆ [0, D−2] that do not depend on h. decompose() reads that shape off
// a single sumset; find_stabilization() sweeps h until the shape stops
// changing for a whole window of consecutive folds and reports the sweep's
// first stable fold as h0_empirical. The detection is empirical: the window
// heuristic certifies the window, not all larger h.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sumcover/intset.hpp"
#include "sumcover/sumset.hpp"

namespace sumcover {

/// The longest maximal subinterval is not unique yet, so the middle interval
/// of the decomposition cannot be identified. Expected for small h.
struct AmbiguousStructure : Error {
  using Error::Error;
};

/// The sweep hit hmax before the decomposition stabilized. For a genuinely
/// normalized set this means window/hmax were too small.
struct NoStabilization : Error {
  using Error::Error;
};

/// One decomposition hA = Cset ∪ [C, h·astar − D] ∪ (h·astar − Dset).
/// Dset is stored reflected: d ∈ Dset means h·astar − d ∈ hA.
struct SumsetStructure {
  std::int64_t h = 0;
  std::int64_t astar = 0;
  std::int64_t C = 0;
  std::int64_t D = 0;
  IntSet Cset;
  IntSet Dset;

  friend bool operator==(const SumsetStructure&, const SumsetStructure&) = default;

  /// Constants-only comparison (h may differ).
  bool same_shape(const SumsetStructure& o) const {
    return astar == o.astar && C == o.C && D == o.D && Cset == o.Cset && Dset == o.Dset;
  }

  /// Rebuilds the decomposed set: fringe ∪ middle interval ∪ reflected fringe.
  IntSet reconstruct() const {
    const std::int64_t top = checked_mul(h, astar);
    std::vector<std::int64_t> vals(Cset.begin(), Cset.end());
    for (std::int64_t v = C; v <= top - D; ++v) vals.push_back(v);
    for (auto it = Dset.values().rbegin(); it != Dset.values().rend(); ++it)
      vals.push_back(top - *it);
    return IntSet::from_sorted(std::move(vals));
  }
};

/// Splits S = hA (for a normalized A with max a* = astar) around its unique
/// longest maximal subinterval. Requires min(S) = 0 and max(S) = h*astar.
/// Throws AmbiguousStructure when two maximal subintervals tie for longest.
inline SumsetStructure decompose(const IntSet& s, std::int64_t h, std::int64_t astar) {
  if (s.empty()) throw std::invalid_argument("decompose: empty set");
  if (h < 1 || astar < 1) throw std::invalid_argument("decompose: h and astar must be >= 1");
  const std::int64_t top = checked_mul(h, astar);
  if (s.min() != 0 || s.max() != top)
    throw std::invalid_argument("decompose: expected min 0 and max h*astar");

  // Scan runs of consecutive integers; keep the longest and detect ties.
  const auto& v = s.values();
  std::int64_t best_lo = v[0], best_hi = v[0], best_len = 1;
  bool tie = false;
  std::int64_t run_lo = v[0], prev = v[0];
  auto close_run = [&](std::int64_t hi) {
    const std::int64_t len = hi - run_lo + 1;
    if (len > best_len) {
      best_lo = run_lo;
      best_hi = hi;
      best_len = len;
      tie = false;
    } else if (len == best_len) {
      tie = true;
    }
  };
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] != prev + 1) {
      close_run(prev);
      run_lo = v[i];
    }
    prev = v[i];
  }
  close_run(prev);
  if (tie)
    throw AmbiguousStructure("decompose: longest maximal subinterval not unique at h=" +
                             std::to_string(h));

  SumsetStructure st;
  st.h = h;
  st.astar = astar;
  st.C = best_lo;
  st.D = top - best_hi;
  std::vector<std::int64_t> cvals, dvals;
  for (auto x : v) {
    if (x < st.C) cvals.push_back(x);
    if (x > top - st.D) dvals.push_back(top - x);
  }
  std::sort(dvals.begin(), dvals.end());
  st.Cset = IntSet::from_sorted(std::move(cvals));
  st.Dset = IntSet::from_sorted(std::move(dvals));
  return st;
}

/// Outcome of a stabilization sweep: the constants held for `window`
/// consecutive folds starting at h0_empirical. per_h keeps the window's
/// decompositions (identical constants, increasing h).
struct StabilizationReport {
  std::int64_t h0_empirical = 0;
  std::int64_t window = 0;
  SumsetStructure structure;
  std::vector<SumsetStructure> per_h;
};

/// Window default: one full period of interval growth (the middle interval
/// gains a* integers per fold), floored at 4.
inline std::int64_t default_window(std::int64_t astar) { return std::max<std::int64_t>(astar, 4); }

/// Generous sweep cap; stabilization thresholds observed in practice are
/// far below this.
inline std::int64_t default_hmax(std::int64_t astar) {
  return checked_mul(50, checked_mul(astar, astar));
}

/// Sweeps h = 1, 2, ... over hA (incrementally) until decompose succeeds
/// with identical constants for `window` consecutive folds. Requires
/// |reduced| >= 2 and window >= 2. Throws NoStabilization at hmax.
inline StabilizationReport find_stabilization(const NormalizedSet& n, std::int64_t window,
                                              std::int64_t hmax) {
  if (n.reduced.size() < 2)
    throw std::invalid_argument("find_stabilization: need |reduced| >= 2");
  if (window < 2) throw std::invalid_argument("find_stabilization: window must be >= 2");
  if (hmax < window) throw std::invalid_argument("find_stabilization: hmax must be >= window");

  detail::SumsetCursor cursor(n.reduced);
  std::vector<SumsetStructure> run;
  for (std::int64_t h = 1; h <= hmax; ++h) {
    if (h > 1) cursor.advance();
    try {
      SumsetStructure st = decompose(cursor.current(), h, n.astar);
      if (!run.empty() && !run.back().same_shape(st)) run.clear();
      run.push_back(std::move(st));
    } catch (const AmbiguousStructure&) {
      run.clear();  // structure has not emerged yet
    }
    if (static_cast<std::int64_t>(run.size()) == window) {
      StabilizationReport rep;
      rep.h0_empirical = run.front().h;
      rep.window = window;
      rep.structure = run.front();
      rep.per_h = std::move(run);
      return rep;
    }
  }
  throw NoStabilization("no stable decomposition within hmax=" + std::to_string(hmax) +
                        " (window=" + std::to_string(window) + ")");
}

}  // namespace sumcover
