#pragma once

#include "nashblow/checks.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace nashblow {

using ReportJson = nlohmann::ordered_json;

inline ReportJson polys_to_json(const std::vector<Polynomial>& ps, const VarietyContext& ctx) {
  ReportJson arr = ReportJson::array();
  for (const auto& p : ps) arr.push_back(ctx.format(p));
  return arr;
}

/// An ideal as its canonical basis: the reduced grevlex basis of (I)+P minus
/// the elements of P.
inline ReportJson ideal_to_json(const Ideal& ideal) {
  return polys_to_json(ideal.canonical_generators(), *ideal.context());
}

inline std::string ideal_to_text(const Ideal& ideal) {
  const auto gens = ideal.canonical_generators();
  if (gens.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += ideal.context()->format(gens[i]);
  }
  return out + ")";
}

inline ReportJson verdict_to_json(const CheckVerdict& v, const VarietyContext& ctx) {
  ReportJson j;
  j["name"] = v.name;
  j["status"] = to_string(v.status);
  j["holds"] = v.holds();
  if (v.exponent) j["exponent"] = *v.exponent;
  if (!v.scan.empty()) {
    ReportJson scan = ReportJson::array();
    for (const auto& [k, ok] : v.scan) scan.push_back({{"exponent", k}, {"holds", ok}});
    j["scan"] = scan;
  }
  if (v.bound_hit) j["cap_hit"] = {{"bound", *v.bound_hit}};
  if (v.failing_generator) {
    j["witness"] = {{"direction", v.failing_direction},
                    {"generator", ctx.format(v.failing_generator->generator)},
                    {"normal_form", ctx.format(v.failing_generator->normal_form)}};
  }
  if (v.divisor) {
    j["divisor"] = {{"numerator", ideal_to_json(v.divisor->numerator)},
                    {"denominator", ctx.format(v.divisor->denominator)}};
  }
  if (v.alarm) j["alarm"] = "theorem-guaranteed check failed: internal consistency error";
  if (v.degenerate) j["degenerate"] = true;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline std::string verdict_to_text(const CheckVerdict& v, const VarietyContext& ctx) {
  std::ostringstream os;
  os << v.name << ": " << to_string(v.status);
  if (v.exponent) os << " (exponent " << *v.exponent << ")";
  if (v.bound_hit) os << " [scan bound " << *v.bound_hit << " reached]";
  os << "\n";
  if (v.failing_generator) {
    os << "  witness (" << v.failing_direction << "): " << ctx.format(v.failing_generator->generator)
       << " has normal form " << ctx.format(v.failing_generator->normal_form) << "\n";
  }
  if (v.divisor) {
    os << "  S = " << ideal_to_text(v.divisor->numerator) << " / (" << ctx.format(v.divisor->denominator)
       << ")\n";
  }
  if (v.alarm) os << "  ALARM: theorem-guaranteed check failed\n";
  if (!v.note.empty()) os << "  note: " << v.note << "\n";
  return os.str();
}

inline ReportJson chain_to_json(const ChainReport& c, const VarietyContext& ctx) {
  ReportJson j;
  j["max_steps"] = c.max_steps;
  j["max_n"] = c.max_n;
  ReportJson steps = ReportJson::array();
  for (const auto& s : c.steps) {
    steps.push_back({{"index", s.index},
                     {"J", ideal_to_json(s.j)},
                     {"JJ", ideal_to_json(s.jj)},
                     {"equality", verdict_to_json(s.equality, ctx)}});
  }
  j["steps"] = steps;
  j["terminated_at"] = c.terminated_at ? ReportJson(*c.terminated_at) : ReportJson(nullptr);
  if (c.terminated_at) j["smallest_n"] = *c.steps[*c.terminated_at].equality.exponent;
  if (c.truncated) j["cap_hit"] = {{"reason", *c.truncated}};
  return j;
}

inline std::string chain_to_text(const ChainReport& c, const VarietyContext& ctx) {
  std::ostringstream os;
  for (const auto& s : c.steps) {
    os << "step " << s.index << ": J = " << ideal_to_text(s.j) << "\n";
    os << "  J(J) = " << ideal_to_text(s.jj) << "\n";
    os << "  " << verdict_to_text(s.equality, ctx);
  }
  if (c.terminated_at) {
    os << "terminated at step " << *c.terminated_at << " with N = "
       << *c.steps[*c.terminated_at].equality.exponent << "\n";
  } else {
    os << "not terminated within " << c.max_steps << " steps\n";
  }
  if (c.truncated) os << "cap hit: " << *c.truncated << "\n";
  return os.str();
}

inline ReportJson foliation_report_to_json(const FoliationReport& r, const Foliation& f) {
  ReportJson j;
  ReportJson tangent = ReportJson::object();
  for (std::size_t i = 0; i < r.tangent.size(); ++i) tangent[f.names[i]] = static_cast<bool>(r.tangent[i]);
  j["tangent"] = tangent;
  j["rank"] = f.rank();
  j["rank_ok"] = r.rank_ok;
  if (r.rank_witness) j["rank_witness"] = f.ctx->format(*r.rank_witness);
  j["closure_ok"] = r.closure_ok;
  if (r.closure_failure) {
    j["closure_failure"] = {f.names[r.closure_failure->first], f.names[r.closure_failure->second]};
  }
  return j;
}

}  // namespace nashblow
