#pragma once

// Covering certificates: verification of rA ⊆ X + A, exact minimum-|X|
// search, a greedy upper bound, and the closed-form classification of which
// sets admit certificates of size 1 and 2.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumcover/bits.hpp"
#include "sumcover/construct.hpp"
#include "sumcover/intset.hpp"
#include "sumcover/sumset.hpp"

namespace sumcover {

/// A witness that A (or an h-fold sumset of it) is an (r, ell)-approximate
/// group: |X| <= ell and rA ⊆ X + A. `verified` is only ever set by an
/// explicit containment check, never assumed from a formula.
struct Certificate {
  std::int64_t r = 0;
  std::int64_t ell = 0;
  IntSet X;
  bool verified = false;
  std::string base_description;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

namespace detail {

/// rA ⊆ X + A given precomputed rows.
inline bool row_covers(const OffsetRow& cover, const BitRow& target, std::int64_t target_lo) {
  return cover.bits.contains_shifted(target, target_lo - cover.lo);
}

}  // namespace detail

/// Decides rA ⊆ X + A exactly. A and X nonempty, r >= 1.
inline bool verify(const IntSet& a, std::int64_t r, const IntSet& x) {
  if (a.empty() || x.empty()) throw std::invalid_argument("verify: empty set");
  if (r < 1) throw std::invalid_argument("verify: r must be >= 1");
  detail::SumsetCursor fold(a);
  fold.advance_to(r);
  const detail::OffsetRow covered = detail::translates_row(x, detail::row_of(a), a.min());
  return detail::row_covers(covered, fold.bits(), fold.lo());
}

namespace detail {

/// Shared state for the cover searches over one (A, r) instance: the
/// universe rA, the candidate translates, and each candidate's coverage
/// mask over the universe.
///
/// Candidates are restricted to x ∈ rA − A. This loses no minimum cover:
/// any x outside rA − A has (x + A) ∩ rA = ∅, so dropping it from a cover
/// leaves a smaller cover — a minimum cover cannot contain one. (A valid
/// non-minimal X may still use such elements; nothing here claims otherwise.)
struct CoverSearch {
  IntSet universe;                       // rA
  std::vector<std::int64_t> candidates;  // rA − A, ascending
  std::size_t nwords = 0;
  std::vector<std::uint64_t> masks;      // candidate coverage, nwords each
  std::vector<std::uint64_t> full;       // all universe bits set

  CoverSearch(const IntSet& a, std::int64_t r) {
    universe = hfold(a, r);
    candidates = add(universe, dilate(a, -1)).values();
    const std::size_t m = universe.size();
    nwords = (m + 63) / 64;
    masks.assign(candidates.size() * nwords, 0);
    const auto& u = universe.values();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      for (auto av : a) {
        const std::int64_t v = checked_add(candidates[c], av);
        const auto it = std::lower_bound(u.begin(), u.end(), v);
        if (it != u.end() && *it == v) {
          const std::size_t idx = static_cast<std::size_t>(it - u.begin());
          masks[c * nwords + (idx >> 6)] |= std::uint64_t{1} << (idx & 63);
        }
      }
    }
    full.assign(nwords, 0);
    for (std::size_t i = 0; i < m; ++i) full[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  const std::uint64_t* mask(std::size_t c) const { return masks.data() + c * nwords; }

  static std::int64_t popcount(const std::uint64_t* w, std::size_t n) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(w[i]);
    return c;
  }
};

}  // namespace detail

/// Exact minimum-cardinality certificate, or nullopt when every X of size
/// <= ell_max fails. Ties between minimum covers break to the
/// lexicographically smallest sorted X. Search is depth-first over
/// candidates in ascending order (so the first cover found at the minimum
/// size is the lex-min one), pruned by the counting obstruction
/// |rA| > ell*|A| and by suffix coverage bounds; a greedy cover seeds the
/// upper end of the size range.
inline std::optional<Certificate> minimal_cover(const IntSet& a, std::int64_t r,
                                                std::int64_t ell_max) {
  if (a.empty()) throw std::invalid_argument("minimal_cover: empty set");
  if (r < 2) throw std::invalid_argument("minimal_cover: r must be >= 2");
  if (ell_max < 1) throw std::invalid_argument("minimal_cover: ell_max must be >= 1");

  const detail::CoverSearch cs(a, r);
  const std::size_t n = cs.candidates.size();
  const std::size_t nw = cs.nwords;
  const std::int64_t m = static_cast<std::int64_t>(cs.universe.size());
  const std::int64_t k = static_cast<std::int64_t>(a.size());

  // Suffix data for pruning: union of masks from index i on, and the largest
  // single-candidate coverage from index i on.
  std::vector<std::uint64_t> suffix_union((n + 1) * nw, 0);
  std::vector<std::int64_t> suffix_best(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    const std::uint64_t* mi = cs.mask(i);
    for (std::size_t w = 0; w < nw; ++w)
      suffix_union[i * nw + w] = suffix_union[(i + 1) * nw + w] | mi[w];
    suffix_best[i] = std::max(suffix_best[i + 1], detail::CoverSearch::popcount(mi, nw));
  }

  // Greedy upper bound caps the deepening loop.
  std::int64_t greedy_size = 0;
  {
    std::vector<std::uint64_t> unc = cs.full;
    while (detail::CoverSearch::popcount(unc.data(), nw) > 0) {
      std::size_t best = n;
      std::int64_t best_gain = 0;
      for (std::size_t c = 0; c < n; ++c) {
        std::int64_t gain = 0;
        const std::uint64_t* mc = cs.mask(c);
        for (std::size_t w = 0; w < nw; ++w) gain += std::popcount(mc[w] & unc[w]);
        if (gain > best_gain) {
          best_gain = gain;
          best = c;
        }
      }
      const std::uint64_t* mb = cs.mask(best);
      for (std::size_t w = 0; w < nw; ++w) unc[w] &= ~mb[w];
      ++greedy_size;
    }
  }

  std::vector<std::size_t> chosen;
  std::vector<std::uint64_t> unc_stack;
  // DFS for a cover of exactly `budget` more candidates from index `start`.
  auto dfs = [&](auto&& self, std::size_t start, std::vector<std::uint64_t>& unc,
                 std::int64_t budget) -> bool {
    const std::int64_t remaining = detail::CoverSearch::popcount(unc.data(), nw);
    if (remaining == 0) return true;
    if (budget == 0) return false;
    for (std::size_t i = start; i < n; ++i) {
      bool feasible = true;
      for (std::size_t w = 0; w < nw; ++w)
        if (unc[w] & ~suffix_union[i * nw + w]) {
          feasible = false;
          break;
        }
      if (!feasible) break;                          // shrinks as i grows
      if (budget * suffix_best[i] < remaining) break;  // non-increasing in i
      const std::uint64_t* mi = cs.mask(i);
      bool gains = false;
      for (std::size_t w = 0; w < nw; ++w)
        if (mi[w] & unc[w]) {
          gains = true;
          break;
        }
      if (!gains) continue;  // a redundant pick can never be part of a minimum cover
      std::vector<std::uint64_t> next(nw);
      for (std::size_t w = 0; w < nw; ++w) next[w] = unc[w] & ~mi[w];
      chosen.push_back(i);
      if (self(self, i + 1, next, budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  const std::int64_t lower = (m + k - 1) / k;  // from |rA| <= ell*|A|
  for (std::int64_t ell = std::max<std::int64_t>(1, lower);
       ell <= std::min(ell_max, greedy_size); ++ell) {
    chosen.clear();
    std::vector<std::uint64_t> unc = cs.full;
    if (dfs(dfs, 0, unc, ell)) {
      std::vector<std::int64_t> xs;
      xs.reserve(chosen.size());
      for (auto i : chosen) xs.push_back(cs.candidates[i]);
      Certificate cert;
      cert.r = r;
      cert.ell = static_cast<std::int64_t>(xs.size());
      cert.X = IntSet::from_sorted(std::move(xs));
      cert.verified = verify(a, r, cert.X);
      cert.base_description = format_set_literal(a);
      if (!cert.verified) throw Error("minimal_cover: internal cover failed verification");
      return cert;
    }
  }
  return std::nullopt;
}

/// Greedy max-coverage certificate: repeatedly takes the candidate translate
/// covering the most still-uncovered elements of rA (ties to the smallest
/// candidate). Always succeeds; size is an upper bound on the true minimum.
inline Certificate greedy_cover(const IntSet& a, std::int64_t r) {
  if (a.empty()) throw std::invalid_argument("greedy_cover: empty set");
  if (r < 2) throw std::invalid_argument("greedy_cover: r must be >= 2");
  const detail::CoverSearch cs(a, r);
  const std::size_t n = cs.candidates.size();
  const std::size_t nw = cs.nwords;
  std::vector<std::uint64_t> unc = cs.full;
  std::vector<std::int64_t> xs;
  while (detail::CoverSearch::popcount(unc.data(), nw) > 0) {
    std::size_t best = n;
    std::int64_t best_gain = 0;
    for (std::size_t c = 0; c < n; ++c) {
      std::int64_t gain = 0;
      const std::uint64_t* mc = cs.mask(c);
      for (std::size_t w = 0; w < nw; ++w) gain += std::popcount(mc[w] & unc[w]);
      if (gain > best_gain) {  // strict: first (smallest) candidate wins ties
        best_gain = gain;
        best = c;
      }
    }
    const std::uint64_t* mb = cs.mask(best);
    for (std::size_t w = 0; w < nw; ++w) unc[w] &= ~mb[w];
    xs.push_back(cs.candidates[best]);
  }
  std::sort(xs.begin(), xs.end());
  Certificate cert;
  cert.r = r;
  cert.ell = static_cast<std::int64_t>(xs.size());
  cert.X = IntSet::from_sorted(std::move(xs));
  cert.verified = verify(a, r, cert.X);
  cert.base_description = format_set_literal(a);
  if (!cert.verified) throw Error("greedy_cover: internal cover failed verification");
  return cert;
}

enum class R2Branch { none, singleton, ap_r2, pair_r3 };

inline const char* to_string(R2Branch b) {
  switch (b) {
    case R2Branch::singleton: return "singleton";
    case R2Branch::ap_r2: return "ap_r2";
    case R2Branch::pair_r3: return "pair_r3";
    default: return "none";
  }
}

/// Closed-form answers for ell = 1 and ell = 2, with witnesses.
struct SmallEllClassification {
  std::int64_t r = 0;
  bool r1 = false;  // certificate of size 1 exists  <=>  |A| = 1
  std::optional<IntSet> r1_witness;
  bool r2 = false;  // size 2: |A|=1, or r=2 and A an AP, or r=3 and |A|=2
  R2Branch r2_branch = R2Branch::none;
  std::optional<IntSet> r2_witness;
};

/// Classification by characterization, no search:
///   size-1 certificates exist iff |A| = 1;
///   for |A| >= 2, size-2 certificates exist iff (r = 2 and A is an
///   arithmetic progression) or (r = 3 and |A| = 2).
inline SmallEllClassification classify_small_ell(const IntSet& a, std::int64_t r) {
  if (a.empty()) throw std::invalid_argument("classify_small_ell: empty set");
  if (r < 2) throw std::invalid_argument("classify_small_ell: r must be >= 2");
  SmallEllClassification c;
  c.r = r;
  const auto& v = a.values();
  if (a.size() == 1) {
    c.r1 = true;
    c.r1_witness = x_singleton(v[0], r);
    c.r2 = true;
    c.r2_branch = R2Branch::singleton;
    c.r2_witness = c.r1_witness;
    return c;
  }
  if (r == 2 && is_arithmetic_progression(a)) {
    c.r2 = true;
    c.r2_branch = R2Branch::ap_r2;
    c.r2_witness = x_ap_r2(v[0], v[1] - v[0], static_cast<std::int64_t>(a.size()));
  } else if (r == 3 && a.size() == 2) {
    c.r2 = true;
    c.r2_branch = R2Branch::pair_r3;
    c.r2_witness = x_pair_r3(v[0], v[1]);
  }
  return c;
}

}  // namespace sumcover
