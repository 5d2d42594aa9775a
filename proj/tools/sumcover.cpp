// sumcover CLI: analyze | certify | asymptotic | construct.
//
// Set inputs are comma-separated literals ("0,3,5") or @path for batch mode
// (one literal per line). --json switches from the human-readable table to
// the machine schema. Exit codes: 0 ok, 1 mathematically negative outcome or
// failed verification, 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sumcover/cli.hpp"

namespace {

using sumcover::Outcome;

std::vector<std::string> gather_inputs(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return {arg};
  std::ifstream in(arg.substr(1));
  if (!in) throw std::invalid_argument("cannot open batch file '" + arg.substr(1) + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("batch file '" + arg.substr(1) + "' is empty");
  return lines;
}

template <typename Fn>
int run_over_inputs(const std::string& set_arg, const std::string& command, bool json, Fn fn) {
  std::vector<std::string> inputs;
  try {
    inputs = gather_inputs(set_arg);
  } catch (const std::invalid_argument& e) {
    sumcover::Report rep;
    rep.command = command;
    rep.input = set_arg;
    rep.status = "error";
    rep.error = e.what();
    std::cout << (json ? sumcover::to_json(rep).dump(2) + "\n" : sumcover::render_table(rep));
    return 2;
  }

  std::vector<Outcome> outcomes;
  outcomes.reserve(inputs.size());
  for (const auto& literal : inputs) {
    try {
      const sumcover::IntSet a = sumcover::parse_set_literal(literal);
      outcomes.push_back(fn(a, literal));
    } catch (const std::invalid_argument& e) {
      sumcover::Report rep;
      rep.command = command;
      rep.input = literal;
      rep.status = "error";
      rep.error = e.what();
      outcomes.push_back(Outcome{std::move(rep), 2});
    } catch (const sumcover::Error& e) {
      sumcover::Report rep;
      rep.command = command;
      rep.input = literal;
      rep.status = "error";
      rep.error = e.what();
      outcomes.push_back(Outcome{std::move(rep), 1});
    }
  }

  int code = 0;
  if (json && outcomes.size() > 1) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& o : outcomes) arr.push_back(sumcover::to_json(o.report));
    std::cout << arr.dump(2) << "\n";
  } else {
    bool first = true;
    for (const auto& o : outcomes) {
      if (json) {
        std::cout << sumcover::to_json(o.report).dump(2) << "\n";
      } else {
        if (!first) std::cout << "\n";
        std::cout << sumcover::render_table(o.report);
      }
      first = false;
    }
  }
  for (const auto& o : outcomes) code = std::max(code, o.exit_code);
  return code;
}

int emit(const Outcome& o, bool json) {
  std::cout << (json ? sumcover::to_json(o.report).dump(2) + "\n"
                     : sumcover::render_table(o.report));
  return o.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sumset analysis and covering certificates for finite integer sets"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "emit the machine-readable JSON schema");

  std::string set_arg;
  std::int64_t r = 2, ell_max = 8, h_from = 1, h_to = 1;
  std::int64_t window = 0, hmax = 0;
  std::int64_t h_opt = 0;

  auto* analyze = app.add_subcommand("analyze", "normalization and eventual sumset structure");
  analyze->add_option("set", set_arg, "set literal or @file")->required();
  analyze->add_option("--window", window, "consecutive folds required for stabilization");
  analyze->add_option("--hmax", hmax, "sweep cap");

  auto* certify = app.add_subcommand("certify", "exact minimum covering certificate");
  certify->add_option("set", set_arg, "set literal or @file")->required();
  certify->add_option("--r", r, "fold count r of the covered sumset rA")->required();
  certify->add_option("--ell-max", ell_max, "largest certificate size to search");
  certify->add_option("--h", h_opt, "certify the h-fold sumset hA instead of A");

  auto* asym = app.add_subcommand("asymptotic", "asymptotic (r, r+1) certificates over a fold range");
  asym->add_option("set", set_arg, "set literal or @file")->required();
  asym->add_option("--r", r, "fold count r")->required();
  asym->add_option("--h-from", h_from, "first fold (clamped up to the threshold h1)");
  asym->add_option("--h-to", h_to, "last fold")->required();
  asym->add_option("--window", window, "stabilization window override");
  asym->add_option("--hmax", hmax, "stabilization sweep cap override");

  auto* cons = app.add_subcommand("construct", "closed-form covering sets");
  cons->require_subcommand(1);
  std::int64_t a0 = 0, a1 = 0, d = 1, k = 2, u0 = 0, u = 0, v = 0, v0 = 0;
  std::int64_t ell = 0;
  auto* c_single = cons->add_subcommand("singleton", "X = {(r-1)*a0} for A = {a0}");
  c_single->add_option("--a0", a0)->required();
  c_single->add_option("--r", r)->required();
  auto* c_pair = cons->add_subcommand("pair-r3", "X = {2*a0, 2*a1} for A = {a0, a1}, r = 3");
  c_pair->add_option("--a0", a0)->required();
  c_pair->add_option("--a1", a1)->required();
  auto* c_ap = cons->add_subcommand("ap-r2", "X = {a0, a0+k*d} for the k-term AP, r = 2");
  c_ap->add_option("--a0", a0)->required();
  c_ap->add_option("--d", d)->required();
  c_ap->add_option("--k", k)->required();
  auto* c_lin = cons->add_subcommand("linear", "progression cover for {u0,v0} ∪ [u,v] ⊆ A ⊆ [u0,v0]");
  c_lin->add_option("--u0", u0)->required();
  c_lin->add_option("--u", u)->required();
  c_lin->add_option("--v", v)->required();
  c_lin->add_option("--v0", v0)->required();
  c_lin->add_option("--r", r)->required();
  c_lin->add_option("--ell", ell, "translate count (default: the minimal feasible value)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      sumcover::AnalyzeOptions opt;
      if (window != 0) opt.window = window;
      if (hmax != 0) opt.hmax = hmax;
      return run_over_inputs(set_arg, "analyze", json, [&](const sumcover::IntSet& a,
                                                           const std::string& lit) {
        return sumcover::cmd_analyze(a, lit, opt);
      });
    }
    if (*certify) {
      sumcover::CertifyOptions opt;
      opt.r = r;
      opt.ell_max = ell_max;
      if (h_opt != 0) opt.h = h_opt;
      return run_over_inputs(set_arg, "certify", json, [&](const sumcover::IntSet& a,
                                                           const std::string& lit) {
        return sumcover::cmd_certify(a, lit, opt);
      });
    }
    if (*asym) {
      sumcover::AsymptoticOptions opt;
      opt.r = r;
      opt.h_from = h_from;
      opt.h_to = h_to;
      if (window != 0) opt.window = window;
      if (hmax != 0) opt.hmax = hmax;
      return run_over_inputs(set_arg, "asymptotic", json, [&](const sumcover::IntSet& a,
                                                              const std::string& lit) {
        return sumcover::cmd_asymptotic(a, lit, opt);
      });
    }
    if (*c_single) return emit(sumcover::cmd_construct_singleton(a0, r), json);
    if (*c_pair) return emit(sumcover::cmd_construct_pair_r3(a0, a1), json);
    if (*c_ap) return emit(sumcover::cmd_construct_ap_r2(a0, d, k), json);
    if (*c_lin)
      return emit(sumcover::cmd_construct_linear(
                      u0, u, v, v0, r, ell != 0 ? std::optional<std::int64_t>(ell) : std::nullopt),
                  json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
