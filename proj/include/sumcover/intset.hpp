#pragma once

// Canonical finite-integer-set value type plus translation, dilation and
// normalization. Everything in this library is built on IntSet: the base
// sets, their h-fold sumsets, covering certificates and integer intervals.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sumcover {

/// Domain error (mathematical failure states). API misuse such as an empty
/// set where a nonempty one is required throws std::invalid_argument instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when 64-bit arithmetic would wrap. All set arithmetic in this
/// library uses these checked helpers; magnitudes grow like r*h*max|a|.
struct ArithmeticOverflow : Error {
  using Error::Error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw ArithmeticOverflow("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out))
    throw ArithmeticOverflow("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw ArithmeticOverflow("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return out;
}

/// A finite set of integers held as a strictly increasing sequence.
/// Immutable after construction; cheap to copy at the sizes this library
/// targets. The empty set is constructible but most operations require a
/// nonempty argument and say so.
class IntSet {
 public:
  IntSet() = default;

  IntSet(std::initializer_list<std::int64_t> values)
      : IntSet(std::vector<std::int64_t>(values)) {}

  /// Builds the set of the given values; sorts and drops duplicates.
  explicit IntSet(std::vector<std::int64_t> values) : elems_(std::move(values)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  /// Adopts an already strictly increasing sequence without re-sorting.
  static IntSet from_sorted(std::vector<std::int64_t> values) {
    IntSet s;
    s.elems_ = std::move(values);
    return s;
  }

  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }

  std::int64_t min() const {
    require_nonempty("min");
    return elems_.front();
  }
  std::int64_t max() const {
    require_nonempty("max");
    return elems_.back();
  }
  /// max - min. Zero for singletons.
  std::int64_t span() const { return checked_sub(max(), min()); }

  bool contains(std::int64_t v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
  }

  const std::vector<std::int64_t>& values() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const IntSet&, const IntSet&) = default;
  /// Lexicographic order on the sorted element sequence. This is the
  /// deterministic tie-break order used by the exact cover search.
  friend auto operator<=>(const IntSet& a, const IntSet& b) {
    return std::lexicographical_compare_three_way(a.elems_.begin(), a.elems_.end(),
                                                  b.elems_.begin(), b.elems_.end());
  }

 private:
  void require_nonempty(const char* what) const {
    if (elems_.empty()) throw std::invalid_argument(std::string(what) + " of empty set");
  }

  std::vector<std::int64_t> elems_;
};

inline std::ostream& operator<<(std::ostream& os, const IntSet& s) {
  os << '{';
  bool first = true;
  for (auto v : s) {
    if (!first) os << ", ";
    os << v;
    first = false;
  }
  return os << '}';
}

/// {y + a : a in A}.
inline IntSet translate(const IntSet& a, std::int64_t y) {
  if (a.empty()) throw std::invalid_argument("translate: empty set");
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (auto v : a) out.push_back(checked_add(y, v));
  return IntSet::from_sorted(std::move(out));
}

/// {d * a : a in A}. d = 0 collapses to {0}; d < 0 reverses the order.
inline IntSet dilate(const IntSet& a, std::int64_t d) {
  if (a.empty()) throw std::invalid_argument("dilate: empty set");
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (auto v : a) out.push_back(checked_mul(d, v));
  if (d < 0) std::reverse(out.begin(), out.end());
  if (d == 0) return IntSet{0};
  return IntSet::from_sorted(std::move(out));
}

/// The interval of integers [lo, hi] as a set.
inline IntSet interval(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("interval: lo > hi");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  return IntSet::from_sorted(std::move(out));
}

/// True iff consecutive differences are all equal. Singletons and pairs are
/// (degenerate) arithmetic progressions.
inline bool is_arithmetic_progression(const IntSet& a) {
  if (a.empty()) throw std::invalid_argument("is_arithmetic_progression: empty set");
  const auto& v = a.values();
  if (v.size() <= 2) return true;
  const std::int64_t d = v[1] - v[0];
  for (std::size_t i = 2; i < v.size(); ++i)
    if (v[i] - v[i - 1] != d) return false;
  return true;
}

/// A in the shape d * reduced + a0 with min(reduced) = 0 and, for
/// |reduced| >= 2, gcd(reduced) = 1. astar is max(reduced).
struct NormalizedSet {
  std::int64_t a0 = 0;
  std::int64_t d = 1;
  IntSet reduced;
  std::int64_t astar = 0;

  friend bool operator==(const NormalizedSet&, const NormalizedSet&) = default;
};

/// Shifts A to minimum 0 and divides out the gcd of the shifted elements.
/// Singletons use d = 1 so that the round trip is exact.
inline NormalizedSet normalize(const IntSet& a) {
  if (a.empty()) throw std::invalid_argument("normalize: empty set");
  NormalizedSet n;
  n.a0 = a.min();
  if (a.size() == 1) {
    n.d = 1;
    n.reduced = IntSet{0};
    n.astar = 0;
    return n;
  }
  std::int64_t g = 0;
  for (auto v : a) g = std::gcd(g, checked_sub(v, n.a0));
  n.d = g;  // g >= 1: A has at least two distinct elements
  std::vector<std::int64_t> red;
  red.reserve(a.size());
  for (auto v : a) red.push_back((v - n.a0) / g);
  n.reduced = IntSet::from_sorted(std::move(red));
  n.astar = n.reduced.max();
  return n;
}

/// Inverse of normalize: d * reduced + a0.
inline IntSet denormalize(const NormalizedSet& n) {
  return translate(dilate(n.reduced, n.d), n.a0);
}

/// Parses the comma-separated set literal format, e.g. "0,3,5" or "-2, 7".
/// Order-insensitive; duplicate elements are rejected as invalid input.
inline IntSet parse_set_literal(std::string_view text) {
  std::vector<std::int64_t> vals;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                 : comma - pos));
    if (tok.empty())
      throw std::invalid_argument("invalid set literal: empty element in '" + std::string(text) + "'");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("invalid set literal: bad integer '" + std::string(tok) + "'");
    vals.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  std::vector<std::int64_t> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("invalid set literal: duplicate element in '" + std::string(text) + "'");
  return IntSet::from_sorted(std::move(sorted));
}

/// Inverse of parse_set_literal: "0,3,5".
inline std::string format_set_literal(const IntSet& s) {
  std::string out;
  bool first = true;
  for (auto v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace sumcover
