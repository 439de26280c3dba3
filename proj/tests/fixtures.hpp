#pragma once

#include "nashblow/checks.hpp"

#include <random>
#include <string>
#include <vector>

namespace nashblow::testing {

struct Fixture {
  std::string name;
  ContextPtr ctx;
  Foliation fol;
};

inline Fixture make_fixture(std::string name, std::vector<std::string> vars, std::vector<std::string> p,
                            std::vector<std::vector<std::string>> derivs) {
  auto ctx = make_context(std::move(vars), std::span<const std::string>(p));
  std::vector<Derivation> ds;
  for (const auto& d : derivs) ds.push_back(Derivation::parse(*ctx, std::span<const std::string>(d)));
  return {std::move(name), ctx, Foliation(ctx, std::move(ds))};
}

inline Fixture affine_line() { return make_fixture("A1", {"x"}, {}, {{"1"}}); }
inline Fixture affine_plane() { return make_fixture("A2", {"x", "y"}, {}, {{"1", "0"}, {"0", "1"}}); }
inline Fixture cusp() { return make_fixture("cusp", {"x", "y"}, {"y^2 - x^3"}, {{"2*y", "3*x^2"}}); }
inline Fixture node() { return make_fixture("node", {"x", "y"}, {"y^2 - x^2 - x^3"}, {{"2*y", "2*x + 3*x^2"}}); }
// x^2 = y^2 z; both fields are Euler-type and commute.
inline Fixture umbrella() {
  return make_fixture("umbrella", {"x", "y", "z"}, {"x^2 - y^2*z"}, {{"x", "y", "0"}, {"x", "0", "2*z"}});
}
inline Fixture cusp3() { return make_fixture("cusp3", {"x", "y", "z"}, {"y^2 - x^3", "z"}, {{"2*y", "3*x^2", "0"}}); }
inline Fixture line3() { return make_fixture("line3", {"x", "y", "z"}, {"y", "z"}, {{"1", "0", "0"}}); }
inline Fixture twisted_cubic() {
  return make_fixture("twisted_cubic", {"x", "y", "z"}, {"y - x^2", "z - x*y"}, {{"1", "2*x", "3*y"}});
}
inline Fixture affine_space3() { return make_fixture("A3", {"x", "y", "z"}, {}, {{"y", "z", "x"}}); }

inline std::vector<Fixture> theorem_corpus() { return {affine_line(), affine_plane(), cusp(), node(), umbrella()}; }
inline std::vector<Fixture> rank_one_space_curves() { return {cusp3(), line3(), twisted_cubic(), affine_space3()}; }

/// Small random polynomials: few terms, bounded degree, small integer coefficients.
class RandomPolys {
 public:
  explicit RandomPolys(unsigned seed) : rng_(seed) {}

  Polynomial poly(const VarietyContext& ctx, unsigned max_terms, unsigned max_degree) {
    const std::size_t n = ctx.nvars();
    std::vector<Term> terms;
    const unsigned count = pick(1, max_terms);
    for (unsigned t = 0; t < count; ++t) {
      Monomial m(n);
      unsigned budget = pick(0, max_degree);
      for (unsigned k = 0; k < budget; ++k) {
        const std::size_t v = pick(0, static_cast<unsigned>(n - 1));
        m.set(v, m[v] + 1);
      }
      int c = static_cast<int>(pick(1, 3));
      if (pick(0, 1)) c = -c;
      terms.push_back({std::move(m), Rational(c)});
    }
    return Polynomial::from_terms(n, std::move(terms));
  }

  /// 1..max_gens generators, each nonzero mod P and not a unit constant.
  std::vector<Polynomial> generators(const VarietyContext& ctx, unsigned max_gens, unsigned max_terms,
                                     unsigned max_degree) {
    std::vector<Polynomial> out;
    const unsigned count = pick(1, max_gens);
    while (out.size() < count) {
      Polynomial p = ctx.reduce(poly(ctx, max_terms, max_degree));
      if (p.is_zero() || p.total_degree() == 0) continue;
      out.push_back(std::move(p));
    }
    return out;
  }

  Ideal ideal(const ContextPtr& ctx, unsigned max_gens = 3, unsigned max_terms = 2, unsigned max_degree = 3) {
    return Ideal(ctx, generators(*ctx, max_gens, max_terms, max_degree));
  }

  unsigned pick(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
};

/// A random expression tree rendered as text, together with the polynomial
/// obtained by building the same tree with ring operations.
struct ExpressionCase {
  std::string text;
  Polynomial expected;
};

class ExpressionGenerator {
 public:
  ExpressionGenerator(std::vector<std::string> vars, unsigned seed) : vars_(std::move(vars)), rng_(seed) {}

  ExpressionCase next(unsigned depth = 3) {
    const std::size_t n = vars_.size();
    const unsigned kind = depth == 0 ? pick(0, 1) : pick(0, 6);
    switch (kind) {
      case 0: {
        const unsigned num = pick(0, 12), den = pick(1, 5);
        std::string t = std::to_string(num);
        if (den != 1 || pick(0, 3) == 0) t += "/" + std::to_string(den);
        return {t, Polynomial::constant(n, make_rational(num, den))};
      }
      case 1: {
        const std::size_t v = pick(0, static_cast<unsigned>(n - 1));
        return {vars_[v], Polynomial::variable(n, v)};
      }
      case 2:
      case 3: {
        ExpressionCase a = next(depth - 1), b = next(depth - 1);
        const bool plus = kind == 2;
        return {a.text + (plus ? " + " : " - ") + "(" + b.text + ")",
                plus ? a.expected + b.expected : a.expected - b.expected};
      }
      case 4: {
        ExpressionCase a = next(depth - 1), b = next(depth - 1);
        return {"(" + a.text + ")*(" + b.text + ")", a.expected * b.expected};
      }
      case 5: {
        ExpressionCase a = next(depth - 1);
        const unsigned e = pick(0, 3);
        return {"(" + a.text + ")^" + std::to_string(e), a.expected.pow(e)};
      }
      default: {
        ExpressionCase a = next(depth - 1);
        return {"-(" + a.text + ")", -a.expected};
      }
    }
  }

 private:
  unsigned pick(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng_); }

  std::vector<std::string> vars_;
  std::mt19937 rng_;
};

inline std::vector<ExpressionCase> expression_corpus(std::size_t count, unsigned seed = 7) {
  ExpressionGenerator gen({"x", "y", "z"}, seed);
  std::vector<ExpressionCase> out;
  while (out.size() < count) out.push_back(gen.next());
  return out;
}

inline std::string describe(const Ideal& i) {
  std::string s = "(";
  for (std::size_t k = 0; k < i.generators().size(); ++k) {
    if (k) s += ", ";
    s += i.context()->format(i.generators()[k]);
  }
  return s + ")";
}

}  // namespace nashblow::testing
