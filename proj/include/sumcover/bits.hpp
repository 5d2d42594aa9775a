#pragma once

// Dense bit-row used as the occupancy map behind sumset computation: a set
// S within a known window [lo, lo+width) is one bit per integer. Sumsets
// reduce to word-level shifted ORs.

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sumcover::detail {

// Safety valve: a row larger than this means the caller asked for a span far
// beyond desk scale (1 GiB of bits).
inline constexpr std::uint64_t kMaxRowBits = std::uint64_t{1} << 33;

class BitRow {
 public:
  explicit BitRow(std::uint64_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {
    if (nbits == 0 || nbits > kMaxRowBits)
      throw std::length_error("bit row span out of range: " + std::to_string(nbits));
  }

  std::uint64_t size() const { return nbits_; }

  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  bool test(std::uint64_t i) const {
    return i < nbits_ && (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  /// this |= other << shift. Requires shift + other.size() <= size().
  void or_shifted(const BitRow& other, std::uint64_t shift) {
    if (shift + other.nbits_ > nbits_)
      throw std::length_error("or_shifted: shifted row does not fit");
    const std::uint64_t ws = shift >> 6;
    const unsigned bs = static_cast<unsigned>(shift & 63);
    const std::size_t n = other.words_.size();
    if (bs == 0) {
      for (std::size_t i = 0; i < n; ++i) words_[i + ws] |= other.words_[i];
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t w = other.words_[i];
        words_[i + ws] |= w << bs;
        if (std::uint64_t hi = w >> (64 - bs); hi != 0) words_[i + ws + 1] |= hi;
      }
    }
  }

  /// True iff every set bit b of sub satisfies test(b + shift), where shift
  /// may be negative.
  bool contains_shifted(const BitRow& sub, std::int64_t shift) const {
    const std::size_t n = sub.words_.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t w = sub.words_[i];
      while (w != 0) {
        const int b = std::countr_zero(w);
        w &= w - 1;
        const std::int64_t pos = static_cast<std::int64_t>((i << 6) + static_cast<unsigned>(b)) + shift;
        if (pos < 0 || static_cast<std::uint64_t>(pos) >= nbits_ ||
            !test(static_cast<std::uint64_t>(pos)))
          return false;
      }
    }
    return true;
  }

  /// Calls f(i) for every set bit in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    const std::size_t n = words_.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int b = std::countr_zero(w);
        w &= w - 1;
        f((i << 6) + static_cast<unsigned>(b));
      }
    }
  }

 private:
  std::uint64_t nbits_;
  std::vector<std::uint64_t> words_;
};

}  // namespace sumcover::detail
