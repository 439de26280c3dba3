#pragma once

#include "nashblow/jideal.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nashblow {

/// N / d with d not in P. Two fractional ideals N1/d1 and N2/d2 are equal
/// iff d2 * N1 = d1 * N2.
struct FractionalIdeal {
  Ideal numerator;
  Polynomial denominator;
};

inline bool fractional_equal(const FractionalIdeal& a, const FractionalIdeal& b) {
  return ideal_equal(ideal_scale(a.numerator, b.denominator), ideal_scale(b.numerator, a.denominator));
}

enum class CheckStatus { holds, fails, inconclusive };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds:
      return "holds";
    case CheckStatus::fails:
      return "fails";
    case CheckStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

struct CheckVerdict {
  std::string name;
  CheckStatus status = CheckStatus::fails;
  /// Smallest exponent (N or alpha) at which a scan succeeded.
  std::optional<unsigned> exponent;
  /// Exponents evaluated by a scan, with their outcome.
  std::map<unsigned, bool> scan;
  /// The scan stopped at its bound without success.
  std::optional<unsigned> bound_hit;
  /// A generator that failed membership, for failed inclusions/equalities.
  std::optional<MembershipWitness> failing_generator;
  /// Which side of an equality failed ("lhs_in_rhs" or "rhs_in_lhs").
  std::string failing_direction;
  /// Divisor S for divisibility checks.
  std::optional<FractionalIdeal> divisor;
  /// A theorem-guaranteed verdict came out false: an implementation bug.
  bool alarm = false;
  bool degenerate = false;
  std::string note;

  bool holds() const { return status == CheckStatus::holds; }
};

namespace detail {

inline CheckVerdict make_verdict(std::string name) {
  CheckVerdict v;
  v.name = std::move(name);
  return v;
}

// Records the inclusion a <= b into the verdict; returns whether it holds.
inline bool record_inclusion(CheckVerdict& v, const Ideal& a, const Ideal& b, const char* direction) {
  if (auto w = b.first_non_member(a)) {
    v.failing_generator = std::move(w);
    v.failing_direction = direction;
    return false;
  }
  return true;
}

inline bool record_equality(CheckVerdict& v, const Ideal& lhs, const Ideal& rhs) {
  if (ideal_equal(lhs, rhs)) return true;
  if (!record_inclusion(v, lhs, rhs, "lhs_in_rhs")) return false;
  record_inclusion(v, rhs, lhs, "rhs_in_lhs");
  return false;
}

}  // namespace detail

/// Evaluates J through a compact presentation of the argument; J is
/// independent of the generating set, which the test suites verify.
inline Ideal j_of(const Ideal& ideal, const Foliation& fol, std::uint64_t cap = kDefaultDeterminantCap) {
  return j_ideal(ideal.compact(), fol, cap).compact();
}

/// I^(r+1) J(J) is contained in J(IJ).
inline CheckVerdict check_thm12(const Ideal& i, const Ideal& j, const Foliation& fol,
                                std::uint64_t cap = kDefaultDeterminantCap) {
  CheckVerdict v = detail::make_verdict("thm12");
  const unsigned r = static_cast<unsigned>(fol.rank());
  Ideal lhs = ideal_product(ideal_power(i, r + 1), j_of(j, fol, cap));
  Ideal rhs = j_of(ideal_product(i, j), fol, cap);
  if (lhs.is_zero()) v.degenerate = true;
  const bool ok = detail::record_inclusion(v, lhs, rhs, "lhs_in_rhs");
  v.status = ok ? CheckStatus::holds : CheckStatus::fails;
  v.alarm = !ok;
  return v;
}

/// J(I^N) = I^((N-1)(r+1)) J(I); the inclusion J(I^N) <= rhs is the
/// power-bound lemma, the reverse follows from thm12.
inline CheckVerdict check_thm14(const Ideal& i, unsigned n, const Foliation& fol,
                                std::uint64_t cap = kDefaultDeterminantCap) {
  if (n < 1) throw std::invalid_argument("check_thm14: N must be at least 1");
  CheckVerdict v = detail::make_verdict("thm14");
  const unsigned r = static_cast<unsigned>(fol.rank());
  Ideal lhs = j_of(ideal_power(i, n), fol, cap);
  Ideal rhs = ideal_product(ideal_power(i, (n - 1) * (r + 1)), j_of(i, fol, cap));
  if (lhs.is_zero() && rhs.is_zero()) v.degenerate = true;
  const bool ok = detail::record_equality(v, lhs, rhs);
  v.status = ok ? CheckStatus::holds : CheckStatus::fails;
  v.alarm = !ok;
  return v;
}

/// The two sides of the main inclusion J(J)^(r+2) <= J(J J(J)), plus J(J).
struct MainSides {
  Ideal jj;   ///< J(J)
  Ideal lhs;  ///< J(J)^(r+2)
  Ideal rhs;  ///< J(J J(J))
};

inline MainSides main_sides(const Ideal& j, const Foliation& fol, std::uint64_t cap = kDefaultDeterminantCap) {
  const unsigned r = static_cast<unsigned>(fol.rank());
  Ideal jj = j_of(j, fol, cap);
  Ideal lhs = ideal_power(jj, r + 2);
  Ideal rhs = j_of(ideal_product(j, jj), fol, cap);
  return {std::move(jj), std::move(lhs), std::move(rhs)};
}

/// J(J)^(r+2) is contained in J(J J(J)). Always true; false raises the alarm flag.
inline CheckVerdict check_main_inclusion(const Ideal& j, const Foliation& fol,
                                         std::uint64_t cap = kDefaultDeterminantCap) {
  CheckVerdict v = detail::make_verdict("main_inclusion");
  MainSides s = main_sides(j, fol, cap);
  if (s.lhs.is_zero()) {
    v.degenerate = true;
    v.note = "degenerate: zero ideal";
  }
  const bool ok = detail::record_inclusion(v, s.lhs, s.rhs, "lhs_in_rhs");
  v.status = ok ? CheckStatus::holds : CheckStatus::fails;
  v.alarm = !ok;
  return v;
}

inline constexpr unsigned kDefaultMaxN = 8;
inline constexpr unsigned kDefaultMaxAlpha = 6;
inline constexpr unsigned kDefaultMaxSteps = 5;

/// Scans N = 0..max_n for J^N J(J)^(r+2) = J^N J(J J(J)) using precomputed sides.
inline CheckVerdict check_main_equality(const Ideal& j, const MainSides& s, unsigned max_n) {
  CheckVerdict v = detail::make_verdict("main_equality");
  if (s.lhs.is_zero() && s.rhs.is_zero()) {
    v.degenerate = true;
    v.note = "degenerate: zero ideal";
    v.status = CheckStatus::holds;
    v.exponent = 0;
    v.scan[0] = true;
    return v;
  }
  if (!detail::record_inclusion(v, s.lhs, s.rhs, "lhs_in_rhs")) {
    v.status = CheckStatus::fails;
    v.alarm = true;
    v.note = "inclusion J(J)^(r+2) <= J(J J(J)) failed";
    return v;
  }
  Ideal lhs = s.lhs;
  Ideal rhs = s.rhs;
  const Ideal jc = j.compact();
  for (unsigned n = 0; n <= max_n; ++n) {
    if (n > 0) {
      lhs = ideal_product(lhs, jc).compact();
      rhs = ideal_product(rhs, jc).compact();
    }
    const bool eq = lhs.includes(rhs);
    v.scan[n] = eq;
    if (eq) {
      v.status = CheckStatus::holds;
      v.exponent = n;
      v.failing_generator.reset();
      v.failing_direction.clear();
      return v;
    }
    if (n == 0) detail::record_inclusion(v, rhs, lhs, "rhs_in_lhs");
  }
  v.status = CheckStatus::inconclusive;
  v.bound_hit = max_n;
  v.note = "no N <= " + std::to_string(max_n) + " gives equality";
  return v;
}

inline CheckVerdict check_main_equality(const Ideal& j, const Foliation& fol, unsigned max_n = kDefaultMaxN,
                                        std::uint64_t cap = kDefaultDeterminantCap) {
  return check_main_equality(j, main_sides(j, fol, cap), max_n);
}

/// Divisibility test at one exponent: with f the first canonical generator
/// of J(I), S = (f I^alpha : J(I)) / f is the largest candidate, so some S
/// with S J(I) = I^alpha exists iff J(I) (f I^alpha : J(I)) = f I^alpha.
inline std::optional<FractionalIdeal> divides_power(const Ideal& ji, const Ideal& i_alpha) {
  const Polynomial f = ji.canonical_generators().front();
  Ideal target = ideal_scale(i_alpha, f);
  Ideal quotient = ideal_quotient(target, ji);
  if (!ideal_product(ji, quotient).includes(target)) return std::nullopt;
  return FractionalIdeal{quotient.compact(), f};
}

/// Some fractional S and alpha <= max_alpha with S J(I) = I^alpha.
inline CheckVerdict check_divisibility(const Ideal& i, const Foliation& fol, unsigned max_alpha = kDefaultMaxAlpha,
                                       std::uint64_t cap = kDefaultDeterminantCap) {
  CheckVerdict v = detail::make_verdict("divisibility");
  Ideal ji = j_of(i, fol, cap);
  if (ji.is_zero()) throw std::domain_error("check_divisibility: J(I) is the zero ideal");
  const Ideal base = i.compact();
  Ideal power = base;
  for (unsigned alpha = 1; alpha <= max_alpha; ++alpha) {
    if (alpha > 1) power = ideal_product(power, base).compact();
    auto s = divides_power(ji, power);
    v.scan[alpha] = s.has_value();
    if (s) {
      v.status = CheckStatus::holds;
      v.exponent = alpha;
      v.divisor = std::move(s);
      return v;
    }
  }
  v.status = CheckStatus::inconclusive;
  v.bound_hit = max_alpha;
  v.note = "no alpha <= " + std::to_string(max_alpha) + " found";
  return v;
}

/// For one derivation on a variety in A^3: (v x v') is contained in (v)^3.
inline CheckVerdict toy_check(const Foliation& fol) {
  const auto& ctx = fol.ctx;
  if (ctx->nvars() != 3) throw InputError("toy check needs exactly 3 variables");
  if (fol.rank() != 1) throw InputError("toy check needs a single derivation");
  const Derivation& d = fol.derivations[0];
  if (d.is_zero(*ctx)) throw InputError("toy check: velocity vector is zero mod P");
  CheckVerdict v = detail::make_verdict("toy");
  std::vector<Polynomial> vel, acc;
  for (const auto& g : d.images) {
    vel.push_back(ctx->reduce(g));
    acc.push_back(fol.apply(0, g));
  }
  std::vector<Polynomial> cross;
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t a = (k + 1) % 3, b = (k + 2) % 3;
    cross.push_back(ctx->reduce(vel[a] * acc[b] - vel[b] * acc[a]));
  }
  Ideal cross_ideal(ctx, cross);
  Ideal cube = ideal_power(Ideal(ctx, vel), 3);
  const bool ok = detail::record_inclusion(v, cross_ideal, cube, "cross_in_cube");
  v.status = ok ? CheckStatus::holds : CheckStatus::fails;
  return v;
}

struct ChainStep {
  unsigned index = 0;
  Ideal j;        ///< J_i
  Ideal jj;       ///< J(J_i)
  CheckVerdict equality;
};

struct ChainReport {
  std::vector<ChainStep> steps;
  std::optional<unsigned> terminated_at;
  /// Set when a cap stopped the chain early; steps holds the partial chain.
  std::optional<std::string> truncated;
  unsigned max_steps = 0;
  unsigned max_n = 0;
};

/// J_0 = R, J_{i+1} = J_i J(J_i); at each step scan the main equality.
inline ChainReport nash_chain(const Foliation& fol, unsigned max_steps = kDefaultMaxSteps,
                              unsigned max_n = kDefaultMaxN, bool continue_past_success = false,
                              std::uint64_t cap = kDefaultDeterminantCap) {
  ChainReport rep;
  rep.max_steps = max_steps;
  rep.max_n = max_n;
  const unsigned r = static_cast<unsigned>(fol.rank());
  Ideal j = Ideal::unit(fol.ctx);
  std::optional<Ideal> jj;
  try {
    for (unsigned i = 0; i <= max_steps; ++i) {
      if (!jj) jj = j_of(j, fol, cap);
      Ideal next = ideal_product(j, *jj).compact();
      Ideal jj_next = j_of(next, fol, cap);
      MainSides sides{*jj, ideal_power(*jj, r + 2), jj_next};
      ChainStep step{i, j, *jj, check_main_equality(j, sides, max_n)};
      const bool ok = step.equality.holds();
      rep.steps.push_back(std::move(step));
      if (ok && !rep.terminated_at) {
        rep.terminated_at = i;
        if (!continue_past_success) break;
      }
      j = std::move(next);
      jj = std::move(jj_next);
    }
  } catch (const CapExceeded& e) {
    rep.truncated = e.what();
  }
  return rep;
}

/// Ideals J_0..J_k of the chain (k >= 0), computed directly.
inline std::vector<Ideal> chain_ideals(const Foliation& fol, unsigned k, std::uint64_t cap = kDefaultDeterminantCap) {
  std::vector<Ideal> out{Ideal::unit(fol.ctx)};
  while (out.size() <= k) out.push_back(ideal_product(out.back(), j_of(out.back(), fol, cap)).compact());
  return out;
}

/// J_i^(N-r-2) J_{i+1}^(r+3) = J_i^N J_{i+2}; J_{i+2} is computed when the
/// report does not reach it.
inline CheckVerdict section1_identity_check(const ChainReport& chain, unsigned i, unsigned n, const Foliation& fol,
                                            std::uint64_t cap = kDefaultDeterminantCap) {
  const unsigned r = static_cast<unsigned>(fol.rank());
  if (n < r + 2) throw std::invalid_argument("identity check needs N >= r + 2");
  std::vector<Ideal> js;
  for (const auto& s : chain.steps) js.push_back(s.j);
  if (js.empty()) js.push_back(Ideal::unit(fol.ctx));
  while (js.size() < i + 3) js.push_back(ideal_product(js.back(), j_of(js.back(), fol, cap)).compact());
  CheckVerdict v = detail::make_verdict("identity");
  Ideal lhs = ideal_product(ideal_power(js[i], n - r - 2), ideal_power(js[i + 1], r + 3));
  Ideal rhs = ideal_product(ideal_power(js[i], n), js[i + 2]);
  const bool ok = detail::record_equality(v, lhs, rhs);
  v.status = ok ? CheckStatus::holds : CheckStatus::fails;
  v.exponent = n;
  return v;
}

}  // namespace nashblow
