#pragma once

// Command implementations behind the CLI binary. Each returns the Report
// plus the process exit code contribution:
//   0  success
//   1  mathematically negative outcome (no certificate within ell_max,
//      failed verification, unreachable threshold, no stabilization)
//   2  invalid input
// The binary maps argument/literal parse failures to 2 itself.

#include <cstdint>
#include <optional>
#include <string>

#include "sumcover/asymptotic.hpp"
#include "sumcover/cover.hpp"
#include "sumcover/construct.hpp"
#include "sumcover/intset.hpp"
#include "sumcover/report.hpp"
#include "sumcover/structure.hpp"
#include "sumcover/sumset.hpp"

namespace sumcover {

struct Outcome {
  Report report;
  int exit_code = 0;
};

namespace detail {

inline Outcome error_outcome(Report rep, const std::string& message, int code) {
  rep.status = "error";
  rep.error = message;
  return Outcome{std::move(rep), code};
}

}  // namespace detail

struct AnalyzeOptions {
  std::optional<std::int64_t> window;
  std::optional<std::int64_t> hmax;
};

/// normalize + stabilization sweep. Singletons report the normalization and
/// skip the sweep (no structure to detect at a* = 0).
inline Outcome cmd_analyze(const IntSet& a, const std::string& input, const AnalyzeOptions& opt) {
  Report rep;
  rep.command = "analyze";
  rep.input = input;
  const NormalizedSet n = normalize(a);
  rep.result["a0"] = n.a0;
  rep.result["d"] = n.d;
  rep.result["reduced"] = set_to_json(n.reduced);
  rep.result["astar"] = n.astar;
  if (a.size() == 1) {
    rep.result["note"] = "singleton set: structure sweep skipped (astar = 0)";
    return Outcome{std::move(rep), 0};
  }
  const std::int64_t window = opt.window.value_or(default_window(n.astar));
  const std::int64_t hmax = opt.hmax.value_or(default_hmax(n.astar));
  rep.result["window"] = window;
  rep.result["hmax"] = hmax;
  try {
    const StabilizationReport stab = find_stabilization(n, window, hmax);
    rep.result["h0_empirical"] = stab.h0_empirical;
    rep.result["C"] = stab.structure.C;
    rep.result["D"] = stab.structure.D;
    rep.result["Cset"] = set_to_json(stab.structure.Cset);
    rep.result["Dset"] = set_to_json(stab.structure.Dset);
  } catch (const NoStabilization& e) {
    return detail::error_outcome(std::move(rep), e.what(), 1);
  }
  return Outcome{std::move(rep), 0};
}

struct CertifyOptions {
  std::int64_t r = 2;
  std::int64_t ell_max = 8;
  std::optional<std::int64_t> h;  // certify hA instead of A
};

/// Exact minimum certificate search plus the closed-form small-ell
/// classification cross-check.
inline Outcome cmd_certify(const IntSet& a, const std::string& input, const CertifyOptions& opt) {
  Report rep;
  rep.command = "certify";
  rep.input = input;
  rep.result["r"] = opt.r;
  rep.result["ell_max"] = opt.ell_max;
  IntSet base = a;
  if (opt.h) {
    rep.result["h"] = *opt.h;
    base = hfold(a, *opt.h);
  }
  const SmallEllClassification cls = classify_small_ell(base, opt.r);
  const auto mc = minimal_cover(base, opt.r, opt.ell_max);
  nlohmann::ordered_json cj;
  cj["r1"] = cls.r1;
  cj["r2"] = cls.r2;
  cj["branch"] = to_string(cls.r2_branch);
  if (cls.r2_witness) cj["r2_witness"] = set_to_json(*cls.r2_witness);
  if (mc) {
    rep.result["min_ell"] = mc->ell;
    rep.result["X"] = set_to_json(mc->X);
    rep.result["verified"] = mc->verified;
    rep.result["classification"] = cj;
    return Outcome{std::move(rep), 0};
  }
  rep.result["classification"] = cj;
  rep.status = "none";
  return Outcome{std::move(rep), 1};
}

struct AsymptoticOptions {
  std::int64_t r = 2;
  std::int64_t h_from = 1;
  std::int64_t h_to = 1;
  std::optional<std::int64_t> window;
  std::optional<std::int64_t> hmax;
};

/// Asymptotic (r, r+1) certificates for every h in [max(h_from, h1), h_to].
/// Any failed verification turns the exit code to 1: the construction is
/// supposed to never fail past h1, so a failure is a defect signal.
inline Outcome cmd_asymptotic(const IntSet& a, const std::string& input,
                              const AsymptoticOptions& opt) {
  Report rep;
  rep.command = "asymptotic";
  rep.input = input;
  rep.result["r"] = opt.r;
  rep.result["h_from"] = opt.h_from;
  rep.result["h_to"] = opt.h_to;
  if (opt.h_from > opt.h_to)
    return detail::error_outcome(std::move(rep), "h_from exceeds h_to", 2);

  nlohmann::ordered_json certs = nlohmann::ordered_json::array();
  bool all_verified = true;

  if (a.size() == 1) {
    rep.result["note"] = "singleton set: h1 = 1";
    rep.result["h1"] = nlohmann::ordered_json{{"num", 0}, {"den", 1}, {"value", 1}};
    rep.result["clamped"] = false;
    for (std::int64_t h = std::max<std::int64_t>(opt.h_from, 1); h <= opt.h_to; ++h) {
      const Certificate cert = asymptotic_cert(a, opt.r, h);
      all_verified = all_verified && cert.verified;
      certs.push_back({{"h", h}, {"ell", cert.ell}, {"X", set_to_json(cert.X)},
                       {"verified", cert.verified}});
    }
    rep.result["certificates"] = certs;
    return Outcome{std::move(rep), all_verified ? 0 : 1};
  }

  try {
    AsymptoticPlan plan = make_asymptotic_plan(a, opt.r, opt.window.value_or(0),
                                               opt.hmax.value_or(0));
    rep.result["window"] = plan.stabilization.window;
    rep.result["h0_empirical"] = plan.stabilization.h0_empirical;
    rep.result["astar"] = plan.normalized.astar;
    rep.result["C"] = plan.stabilization.structure.C;
    rep.result["D"] = plan.stabilization.structure.D;
    rep.result["h1"] = nlohmann::ordered_json{
        {"num", plan.h1_num}, {"den", plan.h1_den}, {"value", plan.h1}};
    if (opt.h_to < plan.h1)
      return detail::error_outcome(std::move(rep),
                                   "entire h range lies below threshold h1=" +
                                       std::to_string(plan.h1),
                                   1);
    const std::int64_t start = std::max(opt.h_from, plan.h1);
    rep.result["clamped"] = start != opt.h_from;
    for (std::int64_t h = start; h <= opt.h_to; ++h) {
      const Certificate& cert = certificate_at(plan, h);
      all_verified = all_verified && cert.verified;
      certs.push_back({{"h", h}, {"ell", cert.ell}, {"X", set_to_json(cert.X)},
                       {"verified", cert.verified}});
    }
    rep.result["certificates"] = certs;
  } catch (const NoStabilization& e) {
    return detail::error_outcome(std::move(rep), e.what(), 1);
  }
  return Outcome{std::move(rep), all_verified ? 0 : 1};
}

inline Outcome cmd_construct_singleton(std::int64_t a0, std::int64_t r) {
  Report rep;
  rep.command = "construct";
  rep.input = "singleton a0=" + std::to_string(a0) + " r=" + std::to_string(r);
  const IntSet x = x_singleton(a0, r);
  rep.result["constructor"] = "singleton";
  rep.result["a0"] = a0;
  rep.result["r"] = r;
  rep.result["X"] = set_to_json(x);
  rep.result["verified"] = verify(IntSet{a0}, r, x);
  return Outcome{std::move(rep), rep.result["verified"].get<bool>() ? 0 : 1};
}

inline Outcome cmd_construct_pair_r3(std::int64_t a0, std::int64_t a1) {
  Report rep;
  rep.command = "construct";
  rep.input = "pair-r3 a0=" + std::to_string(a0) + " a1=" + std::to_string(a1);
  if (a0 >= a1) return detail::error_outcome(std::move(rep), "requires a0 < a1", 2);
  const IntSet x = x_pair_r3(a0, a1);
  rep.result["constructor"] = "pair_r3";
  rep.result["r"] = 3;
  rep.result["X"] = set_to_json(x);
  rep.result["verified"] = verify(IntSet{a0, a1}, 3, x);
  return Outcome{std::move(rep), rep.result["verified"].get<bool>() ? 0 : 1};
}

inline Outcome cmd_construct_ap_r2(std::int64_t a0, std::int64_t d, std::int64_t k) {
  Report rep;
  rep.command = "construct";
  rep.input = "ap-r2 a0=" + std::to_string(a0) + " d=" + std::to_string(d) +
              " k=" + std::to_string(k);
  if (d < 1 || k < 2) return detail::error_outcome(std::move(rep), "requires d >= 1, k >= 2", 2);
  const IntSet x = x_ap_r2(a0, d, k);
  std::vector<std::int64_t> ap;
  for (std::int64_t i = 0; i < k; ++i) ap.push_back(checked_add(a0, checked_mul(i, d)));
  const IntSet a = IntSet::from_sorted(std::move(ap));
  rep.result["constructor"] = "ap_r2";
  rep.result["r"] = 2;
  rep.result["A"] = set_to_json(a);
  rep.result["X"] = set_to_json(x);
  rep.result["verified"] = verify(a, 2, x);
  return Outcome{std::move(rep), rep.result["verified"].get<bool>() ? 0 : 1};
}

inline Outcome cmd_construct_linear(std::int64_t u0, std::int64_t u, std::int64_t v,
                                    std::int64_t v0, std::int64_t r,
                                    std::optional<std::int64_t> ell) {
  Report rep;
  rep.command = "construct";
  rep.input = "linear u0=" + std::to_string(u0) + " u=" + std::to_string(u) +
              " v=" + std::to_string(v) + " v0=" + std::to_string(v0) +
              " r=" + std::to_string(r);
  try {
    const LinearPattern pat(u0, u, v, v0);
    const std::int64_t min_ell = linear_min_ell(pat, r);
    const std::int64_t use_ell = ell.value_or(min_ell);
    rep.result["constructor"] = "linear";
    rep.result["r"] = r;
    rep.result["min_ell"] = min_ell;
    rep.result["ell"] = use_ell;
    const IntSet x = x_linear(pat, r, use_ell);
    rep.result["X"] = set_to_json(x);
    // X covers every A matching the pattern; check the smallest and largest
    // matching sets outright.
    std::vector<std::int64_t> small{u0, v0};
    for (std::int64_t t = u; t <= v; ++t) small.push_back(t);
    const bool ok = verify(IntSet(std::move(small)), r, x) && verify(interval(u0, v0), r, x);
    rep.result["verified"] = ok;
    return Outcome{std::move(rep), ok ? 0 : 1};
  } catch (const PreconditionViolated& e) {
    return detail::error_outcome(std::move(rep), e.what(), 1);
  } catch (const std::invalid_argument& e) {
    return detail::error_outcome(std::move(rep), e.what(), 2);
  }
}

}  // namespace sumcover
