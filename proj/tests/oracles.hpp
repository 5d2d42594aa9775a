#pragma once

// Brute-force reference implementations used to check the library. These
// deliberately share no code with the implementation: plain std::set loops,
// no bit tricks, no incremental caching.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sumcover/intset.hpp"

namespace oracle {

using sumcover::IntSet;

inline std::set<std::int64_t> to_std(const IntSet& s) {
  return {s.begin(), s.end()};
}

inline IntSet to_set(const std::set<std::int64_t>& s) {
  return IntSet(std::vector<std::int64_t>(s.begin(), s.end()));
}

inline std::set<std::int64_t> brute_add(const std::set<std::int64_t>& a,
                                        const std::set<std::int64_t>& b) {
  std::set<std::int64_t> out;
  for (auto x : a)
    for (auto y : b) out.insert(x + y);
  return out;
}

inline std::set<std::int64_t> brute_hfold(const std::set<std::int64_t>& a, std::int64_t h) {
  std::set<std::int64_t> out = a;
  for (std::int64_t i = 1; i < h; ++i) out = brute_add(out, a);
  return out;
}

inline bool brute_verify(const std::set<std::int64_t>& a, std::int64_t r,
                         const std::set<std::int64_t>& x) {
  const auto ra = brute_hfold(a, r);
  const auto xa = brute_add(x, a);
  for (auto v : ra)
    if (!xa.count(v)) return false;
  return true;
}

inline bool brute_is_ap(const std::vector<std::int64_t>& sorted) {
  if (sorted.size() <= 2) return true;
  const std::int64_t d = sorted[1] - sorted[0];
  for (std::size_t i = 2; i < sorted.size(); ++i)
    if (sorted[i] - sorted[i - 1] != d) return false;
  return true;
}

/// True iff some X of exactly `size` elements drawn from `candidates`
/// covers: rA ⊆ X + A. Plain combinations enumeration.
inline bool cover_of_size_exists(const std::set<std::int64_t>& a, std::int64_t r,
                                 const std::vector<std::int64_t>& candidates, std::size_t size) {
  const auto ra = brute_hfold(a, r);
  std::vector<std::size_t> idx(size);
  const std::size_t n = candidates.size();
  if (size > n) return false;
  // combinations via manual odometer
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    std::set<std::int64_t> x;
    for (auto i : idx) x.insert(candidates[i]);
    if (brute_verify(a, r, x)) return true;
    // next combination
    std::size_t k = size;
    while (k > 0) {
      --k;
      if (idx[k] != k + n - size) {
        ++idx[k];
        for (std::size_t j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (k == 0) return false;
    }
  }
}

/// All subsets of [0, top] with at least min_size elements, as sorted vectors.
inline std::vector<std::vector<std::int64_t>> all_subsets(std::int64_t top,
                                                          std::size_t min_size) {
  std::vector<std::vector<std::int64_t>> out;
  const std::uint32_t limit = std::uint32_t{1} << (top + 1);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::vector<std::int64_t> s;
    for (std::int64_t i = 0; i <= top; ++i)
      if (mask & (std::uint32_t{1} << i)) s.push_back(i);
    if (s.size() >= min_size) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace oracle
