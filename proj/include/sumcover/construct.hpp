#pragma once

// Closed-form covering sets and the two certificate-transfer maps. Each
// constructor returns the X of a containment rA ⊆ X + A for its input
// family; none of them searches.

#include <cstdint>
#include <string>
#include <vector>

#include "sumcover/intset.hpp"

namespace sumcover {

/// A closed-form constructor was invoked outside its validity condition
/// (e.g. x_linear with too few translates).
struct PreconditionViolated : Error {
  using Error::Error;
};

/// X = {(r-1)*a0} covers r{a0} = {r*a0}.
inline IntSet x_singleton(std::int64_t a0, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("x_singleton: r must be >= 1");
  return IntSet{checked_mul(checked_sub(r, 1), a0)};
}

/// X = {2*a0, 2*a1} covers 3{a0,a1} = {3a0, 2a0+a1, a0+2a1, 3a1}.
inline IntSet x_pair_r3(std::int64_t a0, std::int64_t a1) {
  if (a0 >= a1) throw std::invalid_argument("x_pair_r3: requires a0 < a1");
  return IntSet{checked_mul(2, a0), checked_mul(2, a1)};
}

/// Two translates covering the doubled arithmetic progression
/// A = {a0 + i*d : 0 <= i <= k-1}:
///
///   2A = {2a0 + i*d : 0 <= i <= 2k-2} ⊆ ({a0} + A) ∪ ({a0 + k*d} + A),
///
/// so X = {a0, a0 + k*d}. (The variant {a0 + d, a0 + k*d} does not work: its
/// smallest sum is 2a0 + d, which misses 2a0 = min(2A).)
inline IntSet x_ap_r2(std::int64_t a0, std::int64_t d, std::int64_t k) {
  if (d < 1) throw std::invalid_argument("x_ap_r2: d must be >= 1");
  if (k < 2) throw std::invalid_argument("x_ap_r2: k must be >= 2");
  return IntSet{a0, checked_add(a0, checked_mul(k, d))};
}

/// Shape constraint {u0, v0} ∪ [u, v] ⊆ A ⊆ [u0, v0]: known endpoints plus a
/// guaranteed inner block of consecutive integers.
struct LinearPattern {
  std::int64_t u0, u, v, v0;

  LinearPattern(std::int64_t u0_, std::int64_t u_, std::int64_t v_, std::int64_t v0_)
      : u0(u0_), u(u_), v(v_), v0(v0_) {
    if (!(u0 <= u && u <= v && v <= v0))
      throw std::invalid_argument("LinearPattern: requires u0 <= u <= v <= v0");
  }

  std::int64_t block_len() const { return v - u + 1; }

  bool matches(const IntSet& a) const {
    if (a.empty() || a.min() < u0 || a.max() > v0) return false;
    if (!a.contains(u0) || !a.contains(v0)) return false;
    for (std::int64_t x = u; x <= v; ++x)
      if (!a.contains(x)) return false;
    return true;
  }
};

/// Smallest ell with ell * (v-u+1) >= r*(v0-u0) + 1, the number of translates
/// needed for x_linear's progression to blanket [r*u0, r*v0].
inline std::int64_t linear_min_ell(const LinearPattern& p, std::int64_t r) {
  if (r < 2) throw std::invalid_argument("linear_min_ell: r must be >= 2");
  const std::int64_t need = checked_add(checked_mul(r, checked_sub(p.v0, p.u0)), 1);
  return (need + p.block_len() - 1) / p.block_len();
}

/// X = {r*u0 - u + i*(v-u+1) : 0 <= i <= ell-1}. Then X + [u,v] is exactly
/// the interval [r*u0, r*u0 + ell*(v-u+1) - 1], which contains [r*u0, r*v0]
/// precisely when ell*(v-u+1) >= r*(v0-u0)+1; since rA ⊆ [r*u0, r*v0] and
/// [u,v] ⊆ A, that yields rA ⊆ X + A for every A matching the pattern.
inline IntSet x_linear(const LinearPattern& p, std::int64_t r, std::int64_t ell) {
  if (r < 2) throw std::invalid_argument("x_linear: r must be >= 2");
  if (ell < 1) throw std::invalid_argument("x_linear: ell must be >= 1");
  if (checked_mul(ell, p.block_len()) < checked_add(checked_mul(r, checked_sub(p.v0, p.u0)), 1))
    throw PreconditionViolated("x_linear: ell=" + std::to_string(ell) + " below the bound " +
                               std::to_string(linear_min_ell(p, r)) + " translates");
  const std::int64_t start = checked_sub(checked_mul(r, p.u0), p.u);
  std::vector<std::int64_t> vals;
  vals.reserve(static_cast<std::size_t>(ell));
  for (std::int64_t i = 0; i < ell; ++i)
    vals.push_back(checked_add(start, checked_mul(i, p.block_len())));
  return IntSet::from_sorted(std::move(vals));
}

/// If rA ⊆ X + A then r(y+A) ⊆ ((r-1)y + X) + (y+A): translating the base
/// set by y translates its certificate by (r-1)y.
inline IntSet transfer_translate(const IntSet& x, std::int64_t y, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("transfer_translate: r must be >= 1");
  return translate(x, checked_mul(checked_sub(r, 1), y));
}

/// If rB ⊆ X + B then for A = d*B + a0 the set d*X + (r-1)a0 covers rA.
inline IntSet transfer_dilate(const IntSet& x, std::int64_t d, std::int64_t a0, std::int64_t r) {
  if (r < 2) throw std::invalid_argument("transfer_dilate: r must be >= 2");
  if (d < 1) throw std::invalid_argument("transfer_dilate: d must be >= 1");
  return translate(dilate(x, d), checked_mul(checked_sub(r, 1), a0));
}

}  // namespace sumcover
