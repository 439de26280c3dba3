#pragma once

#include "nashblow/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nashblow {

/// Reduced Groebner basis: monic generators, no term of any generator
/// divisible by another generator's leading monomial, sorted ascending by
/// leading monomial. Empty generator list = zero ideal.
struct GroebnerBasis {
  std::size_t nvars = 0;
  MonomialOrder order{};
  std::vector<Polynomial> generators;

  bool is_zero_ideal() const { return generators.empty(); }
  bool is_unit_ideal() const {
    return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero();
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.nvars == b.nvars && a.order == b.order && a.generators == b.generators;
  }
};

namespace detail {

inline const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    if (g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

inline const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial* const> divisors) {
  for (const auto* g : divisors) {
    if (g->leading_monomial().divides(m)) return g;
  }
  return nullptr;
}

template <class Divisors>
Polynomial full_reduce(Polynomial p, const Divisors& divisors) {
  Polynomial remainder(p.nvars(), p.order());
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    if (const Polynomial* g = find_reducer(lt.mono, divisors)) {
      Rational c = lt.coeff / g->leading_coefficient();
      Monomial q = g->leading_monomial().quotient_of(lt.mono);
      p = p.sub_mul_term(c, q, *g);
    } else {
      remainder.push_trailing_term(p.pop_leading_term());
    }
  }
  return remainder;
}

}  // namespace detail

/// Remainder of `f` on multivariate division by `divisors` (all terms reduced).
/// For a Groebner basis this is the unique normal form.
inline Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
  return detail::full_reduce(f, divisors);
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (f.nvars() != basis.nvars) throw std::invalid_argument("normal_form: variable count mismatch");
  Polynomial g = f.order() == basis.order ? f : f.with_order(basis.order);
  return detail::full_reduce(std::move(g), std::span<const Polynomial>(basis.generators));
}

inline bool contains(const GroebnerBasis& basis, const Polynomial& f) {
  return normal_form(f, basis).is_zero();
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_term(f.leading_monomial().quotient_of(l), 1 / f.leading_coefficient());
  return a.sub_mul_term(1 / g.leading_coefficient(), g.leading_monomial().quotient_of(l), g);
}

/// Exact quotient f / g; throws std::logic_error if g does not divide f.
inline Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial rest = f.order() == g.order() ? f : f.with_order(g.order());
  Polynomial quotient(f.nvars(), g.order());
  std::vector<Term> q;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!g.leading_monomial().divides(lt.mono)) {
      throw std::logic_error("divide_exact: polynomial is not divisible");
    }
    Term t{g.leading_monomial().quotient_of(lt.mono), lt.coeff / g.leading_coefficient()};
    rest = rest.sub_mul_term(t.coeff, t.mono, g);
    q.push_back(std::move(t));
  }
  return Polynomial::from_terms(f.nvars(), std::move(q), g.order());
}

namespace detail {

// Fraction-free variant of full_reduce for divisors with integer
// coefficients: p is scaled up instead of dividing by leading coefficients,
// and the common content of p and the remainder is stripped after each step.
// Returns the remainder up to a nonzero rational factor, made primitive.
template <class Divisors>
Polynomial ff_reduce(Polynomial p, const Divisors& divisors) {
  Polynomial remainder(p.nvars(), p.order());
  p = p.primitive();
  Integer a, b, d;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* g = find_reducer(lt.mono, divisors);
    if (!g) {
      remainder.push_trailing_term(p.pop_leading_term());
      continue;
    }
    a = g->leading_coefficient().get_num();
    b = lt.coeff.get_num();
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= d;
    b /= d;
    Monomial q = g->leading_monomial().quotient_of(lt.mono);
    if (a != 1) {
      p = p * Rational(a);
      remainder = remainder * Rational(a);
    }
    p = p.sub_mul_term(Rational(b), q, *g);
    d = 0;
    for (const Polynomial* part : {&p, &remainder}) {
      for (const auto& t : part->terms()) {
        mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), t.coeff.get_num_mpz_t());
        if (d == 1) break;
      }
      if (d == 1) break;
    }
    if (d > 1) {
      const Rational inv(Integer(1), d);
      p = p * inv;
      remainder = remainder * inv;
    }
  }
  return remainder.primitive();
}

// S-polynomial scaled to stay integral for integral f and g.
inline Polynomial ff_s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Integer a = f.leading_coefficient().get_num(), b = g.leading_coefficient().get_num(), d;
  mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Polynomial s = f.mul_term(f.leading_monomial().quotient_of(l), Rational(b / d));
  return s.sub_mul_term(Rational(a / d), g.leading_monomial().quotient_of(l), g);
}

// Buchberger with the normal selection strategy and Gebauer-Moeller pair
// pruning. Input polynomials are queued alongside S-pairs by leading-monomial
// degree, so redundant inputs are reduced away before they spawn pairs.
// Working polynomials are kept primitive and integral; the basis is made
// monic only in finish().
class Buchberger {
 public:
  Buchberger(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

  GroebnerBasis run(std::span<const Polynomial> input) {
    std::vector<Polynomial> pending;
    pending.reserve(input.size());
    for (const auto& f : input) {
      if (f.nvars() != nvars_) throw std::invalid_argument("groebner: variable count mismatch");
      if (f.is_zero()) continue;
      pending.push_back((f.order() == order_ ? f : f.with_order(order_)).primitive());
    }
    std::stable_sort(pending.begin(), pending.end(), [this](const Polynomial& a, const Polynomial& b) {
      return order_.less(a.leading_monomial(), b.leading_monomial());
    });
    pending.erase(std::unique(pending.begin(), pending.end()), pending.end());

    std::size_t next_input = 0;
    while (next_input < pending.size() || !pairs_.empty()) {
      std::optional<std::size_t> best_pair = select_pair();
      bool take_input = next_input < pending.size();
      if (take_input && best_pair) {
        const Monomial& lm = pending[next_input].leading_monomial();
        const Pair& p = pairs_[*best_pair];
        take_input = lm.degree() < p.lcm.degree() ||
                     (lm.degree() == p.lcm.degree() && !order_.less(p.lcm, lm));
      }
      Polynomial h(nvars_, order_);
      if (take_input) {
        h = std::move(pending[next_input++]);
      } else {
        Pair p = std::move(pairs_[*best_pair]);
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(*best_pair));
        h = ff_s_polynomial(basis_[p.i], basis_[p.j]);
      }
      h = ff_reduce(std::move(h), live_view());
      if (h.is_zero()) continue;
      if (h.is_constant()) {
        return GroebnerBasis{nvars_, order_, {Polynomial::constant(nvars_, Rational(1), order_)}};
      }
      update(std::move(h));
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t seq;
  };

  std::optional<std::size_t> select_pair() const {
    if (pairs_.empty()) return std::nullopt;
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      auto c = order_.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && a.seq < b.seq)) best = k;
    }
    return best;
  }

  std::vector<const Polynomial*> live_view() const {
    std::vector<const Polynomial*> v;
    v.reserve(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (live_[k]) v.push_back(&basis_[k]);
    }
    return v;
  }

  void update(Polynomial h) {
    const std::size_t hi = basis_.size();
    const Monomial hm = h.leading_monomial();
    basis_.push_back(std::move(h));
    live_.push_back(true);

    // Candidate new pairs (g, h) for live g.
    std::vector<Pair> cands;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!live_[g]) continue;
      cands.push_back({g, hi, lcm(basis_[g].leading_monomial(), hm), 0});
    }
    // Chain criterion among the new pairs; coprime pairs are kept here and
    // dropped below so they can still shadow other candidates.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const Pair& p = cands[a];
      const bool is_coprime = coprime(basis_[p.i].leading_monomial(), hm);
      bool dominated = false;
      if (!is_coprime) {
        for (std::size_t b = a + 1; b < cands.size() && !dominated; ++b) {
          dominated = cands[b].lcm.divides(p.lcm);
        }
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b) {
          dominated = kept[b].lcm.divides(p.lcm);
        }
      }
      if (!dominated) kept.push_back(p);
    }
    // Product criterion.
    std::vector<Pair> fresh;
    for (auto& p : kept) {
      if (!coprime(basis_[p.i].leading_monomial(), hm)) fresh.push_back(std::move(p));
    }
    // Old pairs made redundant by h.
    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size() + fresh.size());
    for (auto& p : pairs_) {
      const bool drop = hm.divides(p.lcm) &&
                        !(lcm(basis_[p.i].leading_monomial(), hm) == p.lcm) &&
                        !(lcm(basis_[p.j].leading_monomial(), hm) == p.lcm);
      if (!drop) survivors.push_back(std::move(p));
    }
    for (auto& p : fresh) {
      p.seq = seq_++;
      survivors.push_back(std::move(p));
    }
    pairs_ = std::move(survivors);
    for (std::size_t g = 0; g < hi; ++g) {
      if (live_[g] && hm.divides(basis_[g].leading_monomial())) live_[g] = false;
    }
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (live_[k]) minimal.push_back(basis_[k]);
    }
    std::sort(minimal.begin(), minimal.end(), [this](const Polynomial& a, const Polynomial& b) {
      return order_.less(a.leading_monomial(), b.leading_monomial());
    });
    GroebnerBasis out{nvars_, order_, {}};
    out.generators.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      // no other leading monomial divides this one, so only the tail moves
      std::vector<const Polynomial*> others;
      for (std::size_t o = 0; o < minimal.size(); ++o) {
        if (o != k) others.push_back(&minimal[o]);
      }
      out.generators.push_back(ff_reduce(minimal[k], others).monic());
    }
    return out;
  }

  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  std::vector<bool> live_;
  std::vector<Pair> pairs_;
  std::uint64_t seq_ = 0;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens` in Q[x_0..x_{n-1}].
inline GroebnerBasis reduced_groebner_basis(std::size_t nvars, std::span<const Polynomial> gens,
                                            MonomialOrder order = MonomialOrder::grevlex()) {
  return detail::Buchberger(nvars, order).run(gens);
}

/// Buchberger's criterion: every S-polynomial of the basis reduces to zero.
inline bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const auto& g = basis.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(s_polynomial(g[i], g[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

/// Checks the reducedness invariants (monic, LM-sorted, fully interreduced).
inline bool is_reduced(const GroebnerBasis& basis) {
  const auto& g = basis.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero() || g[i].leading_coefficient() != 1) return false;
    if (i > 0 && !basis.order.less(g[i - 1].leading_monomial(), g[i].leading_monomial())) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[i].terms()) {
        if (g[j].leading_monomial().divides(t.mono)) return false;
      }
    }
  }
  return true;
}

}  // namespace nashblow
