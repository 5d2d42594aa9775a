#pragma once

// Exact pairwise and h-fold sumsets over a dense occupancy map. A + B is
// computed as a union of copies of B's bit-row shifted by each a - min(A);
// hA is the h-th step of that recurrence. Both always return canonical
// IntSet values. All functions are pure; SumsetSequence and SumsetCursor
// carry a growing cache and must be confined to one thread or guarded
// externally.

#include <cstdint>
#include <utility>
#include <vector>

#include "sumcover/bits.hpp"
#include "sumcover/intset.hpp"

namespace sumcover {

namespace detail {

/// A bit-row with an anchor: bit i represents the integer lo + i.
struct OffsetRow {
  BitRow bits;
  std::int64_t lo;

  IntSet to_set() const {
    std::vector<std::int64_t> vals;
    vals.reserve(bits.count());
    bits.for_each([&](std::uint64_t i) { vals.push_back(lo + static_cast<std::int64_t>(i)); });
    return IntSet::from_sorted(std::move(vals));
  }
};

/// Offsets a - min(A) of a nonempty set, as shift amounts.
inline std::vector<std::uint64_t> rel_offsets(const IntSet& a) {
  std::vector<std::uint64_t> rel;
  rel.reserve(a.size());
  const std::int64_t lo = a.min();
  for (auto v : a) rel.push_back(static_cast<std::uint64_t>(v - lo));
  return rel;
}

inline BitRow row_of(const IntSet& a) {
  BitRow row(static_cast<std::uint64_t>(a.span()) + 1);
  for (auto off : rel_offsets(a)) row.set(off);
  return row;
}

/// Occupancy row of A + B.
inline OffsetRow sum_rows(const IntSet& a, const IntSet& b) {
  const std::int64_t lo = checked_add(a.min(), b.min());
  (void)checked_add(a.max(), b.max());  // fail loudly before sizing the row
  const std::uint64_t width =
      static_cast<std::uint64_t>(a.span()) + static_cast<std::uint64_t>(b.span()) + 1;
  BitRow out(width);
  const BitRow rb = row_of(b);
  for (auto off : rel_offsets(a)) out.or_shifted(rb, off);
  return OffsetRow{std::move(out), lo};
}

/// Occupancy row of X + S given S's row, without materializing X + S.
inline OffsetRow translates_row(const IntSet& x, const BitRow& s_bits, std::int64_t s_lo) {
  const std::int64_t lo = checked_add(x.min(), s_lo);
  const std::uint64_t width = static_cast<std::uint64_t>(x.span()) + s_bits.size();
  BitRow out(width);
  for (auto off : rel_offsets(x)) out.or_shifted(s_bits, off);
  return OffsetRow{std::move(out), lo};
}

}  // namespace detail

/// {a + b : a in A, b in B}. Both sets must be nonempty.
inline IntSet add(const IntSet& a, const IntSet& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("add: empty operand");
  return detail::sum_rows(a, b).to_set();
}

namespace detail {

/// Incremental h-fold walker: holds the occupancy row of hA and extends it
/// one fold at a time. The workhorse behind hfold, the stabilization sweep
/// and asymptotic certificate verification.
class SumsetCursor {
 public:
  explicit SumsetCursor(const IntSet& base)
      : base_min_(base.empty() ? throw std::invalid_argument("SumsetCursor: empty base") : base.min()),
        rel_(rel_offsets(base)),
        h_(1),
        bits_(row_of(base)) {}

  std::int64_t fold() const { return h_; }
  const BitRow& bits() const { return bits_; }
  std::int64_t lo() const { return checked_mul(h_, base_min_); }

  void advance() {
    const std::uint64_t step = rel_.back();
    BitRow next(bits_.size() + step);
    for (auto off : rel_) next.or_shifted(bits_, off);
    bits_ = std::move(next);
    ++h_;
    (void)lo();  // overflow check for the new anchor
  }

  /// Moves to fold h, restarting from the base when h < current fold.
  void advance_to(std::int64_t h) {
    if (h < 1) throw std::invalid_argument("advance_to: fold must be >= 1");
    if (h < h_) {
      BitRow fresh(rel_.back() + 1);
      for (auto off : rel_) fresh.set(off);
      bits_ = std::move(fresh);
      h_ = 1;
    }
    while (h_ < h) advance();
  }

  IntSet current() const { return OffsetRow{bits_, lo()}.to_set(); }

 private:
  std::int64_t base_min_;
  std::vector<std::uint64_t> rel_;
  std::int64_t h_;
  BitRow bits_;
};

}  // namespace detail

/// The h-fold sumset hA = A + A + ... + A (h summands). h >= 1.
inline IntSet hfold(const IntSet& a, std::int64_t h) {
  if (a.empty()) throw std::invalid_argument("hfold: empty set");
  if (h < 1) throw std::invalid_argument("hfold: h must be >= 1");
  detail::SumsetCursor c(a);
  c.advance_to(h);
  return c.current();
}

/// r*size - r + 1: the sharp lower bound on |rA| for |A| = size, attained
/// exactly by arithmetic progressions.
inline std::int64_t card_lower_bound(std::int64_t size, std::int64_t r) {
  if (size < 1 || r < 1) throw std::invalid_argument("card_lower_bound: size and r must be >= 1");
  return checked_add(checked_sub(checked_mul(r, size), r), 1);
}

/// Materialized prefix of the sequence A, 2A, 3A, ... Entry h is computed
/// once and cached; at(h) extends the cache as needed.
class SumsetSequence {
 public:
  explicit SumsetSequence(IntSet base) : base_(std::move(base)), cursor_(base_) {
    cache_.push_back(base_);
  }

  const IntSet& base() const { return base_; }
  std::int64_t computed_up_to() const { return static_cast<std::int64_t>(cache_.size()); }

  const IntSet& at(std::int64_t h) {
    if (h < 1) throw std::invalid_argument("SumsetSequence::at: h must be >= 1");
    while (computed_up_to() < h) {
      cursor_.advance();
      cache_.push_back(cursor_.current());
    }
    return cache_[static_cast<std::size_t>(h - 1)];
  }

 private:
  IntSet base_;
  std::vector<IntSet> cache_;
  detail::SumsetCursor cursor_;
};

}  // namespace sumcover
