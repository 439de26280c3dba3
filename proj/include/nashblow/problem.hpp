#pragma once

#include "nashblow/checks.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace nashblow {

/// A problem instance as read from JSON:
///   { "ring": {"variables": ["x","y"], "characteristic": 0},
///     "defining_ideal": ["y^2 - x^3"],
///     "derivations": {"d": ["2*y", "3*x^2"]},
///     "foliation": ["d"],
///     "ideals": {"J1": ["y", "x^2"]} }
struct ProblemSpec {
  ContextPtr ctx;
  std::map<std::string, Derivation> derivations;
  std::vector<std::string> foliation_names;
  std::map<std::string, Ideal> ideals;

  bool has_foliation() const { return !foliation_names.empty(); }

  Foliation foliation() const {
    if (foliation_names.empty()) throw InputError("problem has no foliation");
    std::vector<Derivation> ds;
    for (const auto& n : foliation_names) ds.push_back(derivations.at(n));
    return Foliation(ctx, std::move(ds), foliation_names);
  }

  const Derivation& derivation(const std::string& name) const {
    auto it = derivations.find(name);
    if (it == derivations.end()) throw InputError("unknown derivation '" + name + "'");
    return it->second;
  }

  const Ideal& ideal(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) throw InputError("unknown ideal '" + name + "'");
    return it->second;
  }
};

namespace detail {

inline std::vector<std::string> string_list(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(what + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

template <class Fn>
auto with_context(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace detail

inline ProblemSpec parse_problem(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("problem must be a JSON object");
  if (!doc.contains("ring") || !doc["ring"].is_object()) throw InputError("missing \"ring\" object");
  const auto& ring = doc["ring"];
  if (!ring.contains("variables")) throw InputError("missing ring.variables");
  std::vector<std::string> vars = detail::string_list(ring["variables"], "ring.variables");
  if (vars.empty()) throw InputError("ring.variables is empty");
  if (ring.contains("characteristic")) {
    const auto& c = ring["characteristic"];
    if (!c.is_number_integer() || c.get<long long>() != 0) {
      throw InputError("only characteristic 0 is supported");
    }
  }
  std::vector<std::string> p_texts;
  if (doc.contains("defining_ideal")) p_texts = detail::string_list(doc["defining_ideal"], "defining_ideal");

  ProblemSpec spec;
  spec.ctx = make_context(std::move(vars), std::span<const std::string>(p_texts));

  if (doc.contains("derivations")) {
    if (!doc["derivations"].is_object()) throw InputError("derivations must be an object");
    for (const auto& [name, images] : doc["derivations"].items()) {
      auto texts = detail::string_list(images, "derivation '" + name + "'");
      spec.derivations.emplace(name, detail::with_context("derivation '" + name + "'", [&] {
                                 return Derivation::parse(*spec.ctx, texts);
                               }));
    }
  }
  if (doc.contains("foliation")) {
    spec.foliation_names = detail::string_list(doc["foliation"], "foliation");
    for (const auto& n : spec.foliation_names) {
      if (!spec.derivations.count(n)) throw InputError("foliation names unknown derivation '" + n + "'");
    }
  }
  if (doc.contains("ideals")) {
    if (!doc["ideals"].is_object()) throw InputError("ideals must be an object");
    for (const auto& [name, gens] : doc["ideals"].items()) {
      auto texts = detail::string_list(gens, "ideal '" + name + "'");
      spec.ideals.emplace(name, detail::with_context("ideal '" + name + "'", [&] {
                            return Ideal::parse(spec.ctx, std::span<const std::string>(texts));
                          }));
    }
  }
  return spec;
}

inline ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(doc);
}

}  // namespace nashblow
