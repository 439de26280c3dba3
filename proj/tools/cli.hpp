#pragma once

#include "nashblow/problem.hpp"
#include "nashblow/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace nashblow::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidInput = 2 };

struct Options {
  std::string spec_path;
  bool json = false;
  bool timing = false;
  std::uint64_t cap = kDefaultDeterminantCap;
  std::string ideal, ideal_i, ideal_j, derivation;
  unsigned n = 1;
  unsigned index = 0;
  unsigned max_n = kDefaultMaxN;
  unsigned max_alpha = kDefaultMaxAlpha;
  unsigned max_steps = kDefaultMaxSteps;
  bool continue_past_success = false;
};

namespace detail {

inline int exit_for(const CheckVerdict& v) { return v.holds() ? kOk : kCheckFailed; }

inline Foliation validated_foliation(const ProblemSpec& spec) {
  Foliation f = spec.foliation();
  FoliationReport rep = foliation_validate(f);
  if (!rep.rank_ok) throw InputError("foliation does not have generic rank " + std::to_string(f.rank()));
  if (!rep.closure_ok) throw InputError("foliation is not closed under the Lie bracket");
  return f;
}

struct Outcome {
  int code = kOk;
  ReportJson json;
  std::string text;
};

inline Outcome verdict_outcome(const CheckVerdict& v, const VarietyContext& ctx) {
  return {exit_for(v), ReportJson::array({verdict_to_json(v, ctx)}), verdict_to_text(v, ctx)};
}

}  // namespace detail

/// Runs one command line (without the program name). Writes the report to
/// `out`, diagnostics to `err`, and returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Ideal operators and resolution checks on affine varieties with foliations", "nashblow"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Write a machine-readable JSON report");
  app.add_flag("--timing", opt.timing, "Include wall-clock timing in the report");
  app.add_option("--cap-determinants", opt.cap, "Cap on enumerated determinant expressions")
      ->check(CLI::PositiveNumber);

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("spec", opt.spec_path, "Problem JSON file")->required();
    sub->fallthrough();
  };

  auto* validate = app.add_subcommand("validate", "Check derivation tangency, foliation rank and Lie closure");
  add_spec(validate);
  auto* jop = app.add_subcommand("jop", "Compute J(I) for a named ideal");
  add_spec(jop);
  jop->add_option("--ideal", opt.ideal)->required();
  auto* mop = app.add_subcommand("mop", "Compute M(f_0..f_m) for a named generator sequence");
  add_spec(mop);
  mop->add_option("--ideal", opt.ideal)->required();
  auto* toy = app.add_subcommand("toy", "Single-vector-field criterion on a variety in A^3");
  add_spec(toy);
  toy->add_option("--derivation", opt.derivation)->required();
  auto* chain = app.add_subcommand("chain", "Nash chain J_{i+1} = J_i J(J_i) with the equality criterion");
  add_spec(chain);
  chain->add_option("--max-steps", opt.max_steps);
  chain->add_option("--max-n", opt.max_n);
  chain->add_flag("--continue-past-success", opt.continue_past_success);

  auto* check = app.add_subcommand("check", "Run one identity or criterion check");
  check->require_subcommand(1);
  check->fallthrough();
  auto* thm12 = check->add_subcommand("thm12", "I^(r+1) J(J) <= J(IJ)");
  add_spec(thm12);
  thm12->add_option("--i", opt.ideal_i)->required();
  thm12->add_option("--j", opt.ideal_j)->required();
  auto* thm14 = check->add_subcommand("thm14", "J(I^N) = I^((N-1)(r+1)) J(I)");
  add_spec(thm14);
  thm14->add_option("--ideal", opt.ideal)->required();
  thm14->add_option("--n", opt.n)->check(CLI::PositiveNumber);
  auto* main_cmd = check->add_subcommand("main", "Inclusion and N-scan of J^N J(J)^(r+2) = J^N J(J J(J))");
  add_spec(main_cmd);
  main_cmd->add_option("--ideal", opt.ideal)->required();
  main_cmd->add_option("--max-n", opt.max_n);
  auto* divides = check->add_subcommand("divides", "Exists S, alpha with S J(I) = I^alpha");
  add_spec(divides);
  divides->add_option("--ideal", opt.ideal)->required();
  divides->add_option("--max-alpha", opt.max_alpha)->check(CLI::PositiveNumber);
  auto* identity = check->add_subcommand("identity", "J_i^(N-r-2) J_{i+1}^(r+3) = J_i^N J_{i+2}");
  add_spec(identity);
  identity->add_option("--i", opt.index)->required();
  identity->add_option("--n", opt.n)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  std::string command;
  for (auto* sub : app.get_subcommands()) {
    command = sub->get_name();
    for (auto* inner : sub->get_subcommands()) command += " " + inner->get_name();
  }

  const auto started = std::chrono::steady_clock::now();
  detail::Outcome result;
  std::optional<ProblemSpec> spec;
  try {
    spec = load_problem(opt.spec_path);
    const ProblemSpec& ps = *spec;
    const VarietyContext& ctx = *ps.ctx;

    if (validate->parsed()) {
      ReportJson derivs = ReportJson::object();
      bool all_ok = true;
      std::string text;
      for (const auto& [name, d] : ps.derivations) {
        const bool ok = derivation_validate(d, ctx);
        derivs[name] = ok;
        all_ok = all_ok && ok;
        text += "derivation " + name + ": " + (ok ? "tangent" : "NOT tangent") + "\n";
      }
      result.json = {{"derivations", derivs}};
      if (ps.has_foliation()) {
        Foliation f = ps.foliation();
        try {
          FoliationReport rep = foliation_validate(f);
          result.json["foliation"] = foliation_report_to_json(rep, f);
          text += "foliation rank " + std::to_string(f.rank()) + ": " + (rep.rank_ok ? "ok" : "FAILS") +
                  (rep.rank_witness ? " (minor " + ctx.format(*rep.rank_witness) + ")" : "") + "\n";
          text += std::string("Lie closure: ") + (rep.closure_ok ? "ok" : "FAILS") + "\n";
          all_ok = all_ok && rep.valid();
        } catch (const InvalidDerivation& e) {
          result.json["foliation"] = {{"error", e.what()}};
          text += std::string("foliation: ") + e.what() + "\n";
          all_ok = false;
        }
      }
      result.code = all_ok ? kOk : kCheckFailed;
      result.text = text;
    } else if (jop->parsed()) {
      Foliation f = detail::validated_foliation(ps);
      Ideal j = j_ideal(ps.ideal(opt.ideal), f, opt.cap);
      result.json = {{"ideal", opt.ideal}, {"J", ideal_to_json(j)}};
      result.text = "J(" + opt.ideal + ") = " + ideal_to_text(j) + "\n";
    } else if (mop->parsed()) {
      Foliation f = detail::validated_foliation(ps);
      Ideal m = m_ideal(ps.ideal(opt.ideal).generators(), f, opt.cap);
      result.json = {{"sequence", opt.ideal}, {"M", ideal_to_json(m)}};
      result.text = "M(" + opt.ideal + ") = " + ideal_to_text(m) + "\n";
    } else if (toy->parsed()) {
      if (ctx.nvars() != 3) throw InputError("toy requires exactly 3 variables");
      const Derivation& d = ps.derivation(opt.derivation);
      if (!derivation_validate(d, ctx)) throw InputError("derivation '" + opt.derivation + "' is not tangent");
      Foliation f(ps.ctx, {d}, {opt.derivation});
      result = detail::verdict_outcome(toy_check(f), ctx);
    } else if (chain->parsed()) {
      Foliation f = detail::validated_foliation(ps);
      ChainReport rep = nash_chain(f, opt.max_steps, opt.max_n, opt.continue_past_success, opt.cap);
      result.json = chain_to_json(rep, ctx);
      result.text = chain_to_text(rep, ctx);
      result.code = rep.terminated_at ? kOk : kCheckFailed;
    } else if (thm12->parsed()) {
      Foliation f = detail::validated_foliation(ps);
      result = detail::verdict_outcome(check_thm12(ps.ideal(opt.ideal_i), ps.ideal(opt.ideal_j), f, opt.cap), ctx);
    } else if (thm14->parsed()) {
      Foliation f = detail::validated_foliation(ps);
      result = detail::verdict_outcome(check_thm14(ps.ideal(opt.ideal), opt.n, f, opt.cap), ctx);
    } else if (main_cmd->parsed()) {
      Foliation f = detail::validated_foliation(ps);
      const Ideal& j = ps.ideal(opt.ideal);
      CheckVerdict inc = check_main_inclusion(j, f, opt.cap);
      CheckVerdict eq = check_main_equality(j, f, opt.max_n, opt.cap);
      result.json = ReportJson::array({verdict_to_json(inc, ctx), verdict_to_json(eq, ctx)});
      result.text = verdict_to_text(inc, ctx) + verdict_to_text(eq, ctx);
      result.code = inc.holds() && eq.holds() ? kOk : kCheckFailed;
    } else if (divides->parsed()) {
      Foliation f = detail::validated_foliation(ps);
      result = detail::verdict_outcome(check_divisibility(ps.ideal(opt.ideal), f, opt.max_alpha, opt.cap), ctx);
    } else if (identity->parsed()) {
      Foliation f = detail::validated_foliation(ps);
      if (opt.n < f.rank() + 2) throw InputError("identity requires N >= r + 2");
      ChainReport empty;
      result = detail::verdict_outcome(section1_identity_check(empty, opt.index, opt.n, f, opt.cap), ctx);
    }
  } catch (const CapExceeded& e) {
    result.code = kCheckFailed;
    result.json = {{"cap_hit", {{"reason", e.what()}, {"requested", e.requested()}, {"cap", e.cap()}}}};
    result.text = std::string("cap hit: ") + e.what() + "\n";
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  if (opt.json) {
    ReportJson report;
    report["command"] = command;
    report["input"] = opt.spec_path;
    report["exit_code"] = result.code;
    report["result"] = result.json;
    report["caps"] = {{"determinants", opt.cap}};
    if (opt.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - started;
      report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    out << report.dump(2) << "\n";
  } else {
    out << result.text;
    if (opt.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - started;
      out << "time: " << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << " ms\n";
    }
  }
  return result.code;
}

}  // namespace nashblow::cli
