#pragma once

// End-to-end pipeline for asymptotic (r, r+1) certificates: normalize the
// base set, detect the eventual sumset structure, and for each fold h past
// the threshold
//
//   h1 = max(h0_empirical, ceil(((r+1)(C+D) - r) / a*))
//
// emit the verified covering set
//
//   X = d * {-C + i*(h*a* - C - D + 1) : 0 <= i <= r} + (r-1)*h*a0
//
// for r*(hA) ⊆ X + hA. Verification is a direct containment check on the
// original set, using the identity r-fold(hA) = (rh)-fold(A) to stay on
// sparse base offsets.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "sumcover/cover.hpp"
#include "sumcover/construct.hpp"
#include "sumcover/intset.hpp"
#include "sumcover/structure.hpp"
#include "sumcover/sumset.hpp"

namespace sumcover {

/// Asked for a certificate below the plan's threshold h1.
struct HBelowThreshold : Error {
  using Error::Error;
};

/// Reusable state for sweeping certificates over h with one stabilization
/// sweep and persistent fold walkers. Not thread-safe; clone per worker.
struct AsymptoticPlan {
  IntSet original;
  NormalizedSet normalized;
  StabilizationReport stabilization;
  std::int64_t r = 0;
  std::int64_t h1 = 0;
  std::int64_t h1_num = 0;  // (r+1)(C+D) - r, may be <= 0
  std::int64_t h1_den = 0;  // a*
  std::map<std::int64_t, Certificate> certificates;

  detail::SumsetCursor hold_walk;  // walks to h
  detail::SumsetCursor fold_walk;  // walks to r*h

  AsymptoticPlan(IntSet a, NormalizedSet n, StabilizationReport stab, std::int64_t r_)
      : original(std::move(a)),
        normalized(std::move(n)),
        stabilization(std::move(stab)),
        r(r_),
        hold_walk(original),
        fold_walk(original) {
    h1_num = checked_sub(checked_mul(checked_add(r, 1),
                                     checked_add(stabilization.structure.C,
                                                 stabilization.structure.D)),
                         r);
    h1_den = normalized.astar;
    // Any integer h at least the (rational) bound qualifies; a nonpositive
    // bound collapses to 1.
    const std::int64_t from_bound = h1_num <= 0 ? 1 : (h1_num + h1_den - 1) / h1_den;
    h1 = std::max(stabilization.h0_empirical, from_bound);
  }
};

/// Builds the plan for A and r. window/hmax of 0 pick the structure-module
/// defaults. Requires |A| >= 2 (see asymptotic_cert for singletons) and r >= 2.
inline AsymptoticPlan make_asymptotic_plan(const IntSet& a, std::int64_t r,
                                           std::int64_t window = 0, std::int64_t hmax = 0) {
  if (a.size() < 2) throw std::invalid_argument("make_asymptotic_plan: need |A| >= 2");
  if (r < 2) throw std::invalid_argument("make_asymptotic_plan: r must be >= 2");
  NormalizedSet n = normalize(a);
  if (window == 0) window = default_window(n.astar);
  if (hmax == 0) hmax = default_hmax(n.astar);
  StabilizationReport stab = find_stabilization(n, window, hmax);
  return AsymptoticPlan(a, std::move(n), std::move(stab), r);
}

/// The certificate for hA from an existing plan, cached in the plan. The
/// covering set comes from the stabilized structure via the linear-pattern
/// progression on the normalized side, transferred back through dilation by
/// d and translation by h*a0; the containment r*(hA) ⊆ X + hA is then
/// checked outright.
inline const Certificate& certificate_at(AsymptoticPlan& plan, std::int64_t h) {
  if (h < plan.h1)
    throw HBelowThreshold("h=" + std::to_string(h) + " below threshold h1=" +
                          std::to_string(plan.h1));
  if (auto it = plan.certificates.find(h); it != plan.certificates.end()) return it->second;

  const SumsetStructure& st = plan.stabilization.structure;
  const std::int64_t top = checked_mul(h, plan.normalized.astar);
  const LinearPattern pat(0, st.C, checked_sub(top, st.D), top);
  const IntSet x_norm = x_linear(pat, plan.r, checked_add(plan.r, 1));
  const IntSet x = transfer_dilate(x_norm, plan.normalized.d,
                                   checked_mul(h, plan.normalized.a0), plan.r);

  plan.hold_walk.advance_to(h);
  plan.fold_walk.advance_to(checked_mul(plan.r, h));
  const detail::OffsetRow covered =
      detail::translates_row(x, plan.hold_walk.bits(), plan.hold_walk.lo());
  const bool ok = detail::row_covers(covered, plan.fold_walk.bits(), plan.fold_walk.lo());

  Certificate cert;
  cert.r = plan.r;
  cert.ell = checked_add(plan.r, 1);
  cert.X = x;
  cert.verified = ok;
  cert.base_description = "fold h=" + std::to_string(h) + " of " +
                          format_set_literal(plan.original);
  return plan.certificates.emplace(h, std::move(cert)).first->second;
}

/// One-shot certificate that hA is an (r, r+1)-approximate group. Recomputes
/// the plan; use make_asymptotic_plan + certificate_at for sweeps over h.
/// Singletons bypass the structure machinery: hA = {h*a0} is covered by the
/// one-element set {(r-1)*h*a0}.
inline Certificate asymptotic_cert(const IntSet& a, std::int64_t r, std::int64_t h) {
  if (a.empty()) throw std::invalid_argument("asymptotic_cert: empty set");
  if (r < 2) throw std::invalid_argument("asymptotic_cert: r must be >= 2");
  if (h < 1) throw std::invalid_argument("asymptotic_cert: h must be >= 1");
  if (a.size() == 1) {
    const std::int64_t ha0 = checked_mul(h, a.min());
    Certificate cert;
    cert.r = r;
    cert.ell = 1;
    cert.X = x_singleton(ha0, r);
    cert.verified = verify(IntSet{ha0}, r, cert.X);
    cert.base_description = "fold h=" + std::to_string(h) + " of " + format_set_literal(a);
    return cert;
  }
  AsymptoticPlan plan = make_asymptotic_plan(a, r);
  return certificate_at(plan, h);
}

}  // namespace sumcover
