#pragma once

#include "nashblow/groebner.hpp"
#include "nashblow/parse.hpp"

#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nashblow {

/// Invalid problem data: bad names, unparsable text, unit defining ideal, ...
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VarietyContext;
using ContextPtr = std::shared_ptr<const VarietyContext>;

/// Coordinate ring R = Q[x_1..x_n]/P of an affine variety. All ring
/// arithmetic on elements of R goes through reduce(), the normal form mod P.
/// P is assumed prime; only 1 not in P is verified.
class VarietyContext {
 public:
  static ContextPtr make(std::vector<std::string> variables,
                         std::span<const std::string> p_generator_texts) {
    std::set<std::string> seen;
    for (const auto& v : variables) {
      if (!is_valid_variable_name(v)) throw InputError("invalid variable name '" + v + "'");
      if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
    }
    std::vector<Polynomial> gens;
    for (const auto& text : p_generator_texts) {
      try {
        gens.push_back(parse_polynomial(text, variables));
      } catch (const ParseError& e) {
        throw InputError("defining ideal: '" + text + "': " + e.what());
      }
    }
    return make(std::move(variables), std::move(gens));
  }

  static ContextPtr make(std::vector<std::string> variables, std::vector<Polynomial> p_generators) {
    const std::size_t n = variables.size();
    for (const auto& g : p_generators) {
      if (g.nvars() != n) throw InputError("defining polynomial over the wrong ring");
    }
    GroebnerBasis basis = reduced_groebner_basis(n, p_generators);
    if (basis.is_unit_ideal()) throw InputError("defining ideal is the unit ideal");
    return std::shared_ptr<const VarietyContext>(
        new VarietyContext(std::move(variables), std::move(p_generators), std::move(basis)));
  }

  std::size_t nvars() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Polynomial>& p_generators() const { return p_generators_; }
  const GroebnerBasis& p_basis() const { return p_basis_; }

  /// Normal form mod P.
  Polynomial reduce(const Polynomial& f) const {
    if (p_basis_.is_zero_ideal()) return f;
    return normal_form(f, p_basis_);
  }
  bool is_zero_mod_p(const Polynomial& f) const { return reduce(f).is_zero(); }

  Polynomial parse(std::string_view text) const { return parse_polynomial(text, variables_); }
  std::string format(const Polynomial& f) const { return format_polynomial(f, variables_); }

  Polynomial zero() const { return Polynomial(nvars()); }
  Polynomial one() const { return Polynomial::constant(nvars(), Rational(1)); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(nvars(), c); }
  Polynomial variable(std::size_t i) const { return Polynomial::variable(nvars(), i); }

 private:
  VarietyContext(std::vector<std::string> variables, std::vector<Polynomial> p_generators,
                 GroebnerBasis p_basis)
      : variables_(std::move(variables)),
        p_generators_(std::move(p_generators)),
        p_basis_(std::move(p_basis)) {}

  std::vector<std::string> variables_;
  std::vector<Polynomial> p_generators_;
  GroebnerBasis p_basis_;
};

inline ContextPtr make_context(std::vector<std::string> variables,
                               std::span<const std::string> p_generator_texts) {
  return VarietyContext::make(std::move(variables), p_generator_texts);
}

inline ContextPtr make_context(std::vector<std::string> variables,
                               std::initializer_list<std::string> p_generator_texts) {
  std::vector<std::string> texts(p_generator_texts);
  return VarietyContext::make(std::move(variables), std::span<const std::string>(texts));
}

}  // namespace nashblow
