#pragma once

#include "nashblow/context.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nashblow {

/// A generator that fails a membership test, with its nonzero normal form.
struct MembershipWitness {
  Polynomial generator;
  Polynomial normal_form;
};

/// Ideal of R = Q[x]/P, given by generators in the ambient polynomial ring.
/// Equality and membership are decided on the lifted ideal (generators) + P,
/// whose reduced grevlex Groebner basis is computed once on first use.
class Ideal {
 public:
  Ideal() = default;
  Ideal(ContextPtr ctx, std::vector<Polynomial> generators)
      : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
    if (!ctx_) throw std::invalid_argument("ideal without context");
    gens_.reserve(generators.size());
    for (auto& g : generators) {
      if (g.nvars() != ctx_->nvars()) throw std::invalid_argument("generator over the wrong ring");
      if (!g.is_zero()) {
        gens_.push_back(g.order() == MonomialOrder::grevlex() ? std::move(g)
                                                              : g.with_order(MonomialOrder::grevlex()));
      }
    }
  }

  static Ideal zero(ContextPtr ctx) { return Ideal(std::move(ctx), {}); }
  static Ideal unit(const ContextPtr& ctx) { return Ideal(ctx, {ctx->one()}); }
  static Ideal principal(const ContextPtr& ctx, Polynomial f) { return Ideal(ctx, {std::move(f)}); }

  static Ideal parse(const ContextPtr& ctx, std::span<const std::string> texts) {
    std::vector<Polynomial> gens;
    for (const auto& t : texts) gens.push_back(ctx->parse(t));
    return Ideal(ctx, std::move(gens));
  }
  static Ideal parse(const ContextPtr& ctx, std::initializer_list<std::string> texts) {
    std::vector<std::string> v(texts);
    return parse(ctx, std::span<const std::string>(v));
  }

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// Reduced Groebner basis of (generators) + P.
  const GroebnerBasis& basis() const {
    std::call_once(cache_->once, [this] {
      if (cache_->preset) {
        cache_->basis = std::move(*cache_->preset);
        cache_->preset.reset();
        return;
      }
      std::vector<Polynomial> input = ctx_->p_basis().generators;
      input.insert(input.end(), gens_.begin(), gens_.end());
      cache_->basis = reduced_groebner_basis(ctx_->nvars(), input);
    });
    return cache_->basis;
  }

  /// Basis elements not in P: the canonical printed form of the ideal of R.
  std::vector<Polynomial> canonical_generators() const {
    std::vector<Polynomial> out;
    for (const auto& g : basis().generators) {
      if (!ctx_->is_zero_mod_p(g)) out.push_back(g);
    }
    return out;
  }

  bool is_zero() const { return canonical_generators().empty(); }
  bool is_unit() const { return basis().is_unit_ideal(); }

  bool contains(const Polynomial& f) const { return nashblow::contains(basis(), f); }
  Polynomial normal_form(const Polynomial& f) const { return nashblow::normal_form(f, basis()); }

  /// First generator of `sub` not contained in this ideal, if any.
  std::optional<MembershipWitness> first_non_member(const Ideal& sub) const {
    for (const auto& g : sub.gens_) {
      Polynomial nf = normal_form(g);
      if (!nf.is_zero()) return MembershipWitness{g, std::move(nf)};
    }
    return std::nullopt;
  }

  bool includes(const Ideal& sub) const { return !first_non_member(sub).has_value(); }

  /// Generators reduced mod P with zeros dropped, duplicates removed and
  /// sorted canonically.
  std::vector<Polynomial> reduced_generators() const {
    std::vector<Polynomial> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) {
      Polynomial r = ctx_->reduce(g);
      if (!r.is_zero()) out.push_back(std::move(r));
    }
    sort_unique(out);
    return out;
  }

  /// Same ideal presented by a small subset of its generators (mod P):
  /// candidates are scanned by ascending degree and kept only when not
  /// already in the ideal spanned by the kept ones.
  Ideal compact() const {
    std::vector<Polynomial> cands = reduced_generators();
    std::stable_sort(cands.begin(), cands.end(), [](const Polynomial& a, const Polynomial& b) {
      if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
      return a.size() < b.size();
    });
    std::vector<Polynomial> kept;
    GroebnerBasis current = ctx_->p_basis();
    for (const auto& c : cands) {
      if (nashblow::contains(current, c)) continue;
      kept.push_back(c);
      std::vector<Polynomial> input = current.generators;
      input.push_back(c);
      current = reduced_groebner_basis(ctx_->nvars(), input);
    }
    sort_unique(kept);
    Ideal out(ctx_, std::move(kept));
    out.cache_->preset = std::move(current);
    return out;
  }

  static void sort_unique(std::vector<Polynomial>& v) {
    std::sort(v.begin(), v.end(), [](const Polynomial& a, const Polynomial& b) { return canonical_less(a, b); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis basis;
    std::optional<GroebnerBasis> preset;
  };

  ContextPtr ctx_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

namespace detail {

inline void require_same_context(const Ideal& a, const Ideal& b) {
  if (a.context() != b.context()) throw std::invalid_argument("ideals over different contexts");
}

/// Intersection of two ideals of the ambient ring Q[x], via
/// t*A + (1-t)*B and elimination of t. Returns the grevlex reduced basis.
inline GroebnerBasis intersect_ambient(std::size_t nvars, std::span<const Polynomial> a,
                                       std::span<const Polynomial> b) {
  const MonomialOrder elim = MonomialOrder::elimination(1);
  const Polynomial t = Polynomial::variable(nvars + 1, 0, elim);
  const Polynomial one_minus_t = Polynomial::constant(nvars + 1, Rational(1), elim) - t;
  std::vector<Polynomial> input;
  for (const auto& f : a) input.push_back(t * f.prepend_variables(1, elim));
  for (const auto& f : b) input.push_back(one_minus_t * f.prepend_variables(1, elim));
  GroebnerBasis gb = reduced_groebner_basis(nvars + 1, input, elim);
  std::vector<Polynomial> free_of_t;
  for (const auto& g : gb.generators) {
    if (!g.involves_any_of_first(1)) free_of_t.push_back(g.drop_leading_variables(1, MonomialOrder::grevlex()));
  }
  return reduced_groebner_basis(nvars, free_of_t);
}

}  // namespace detail

inline bool ideal_equal(const Ideal& a, const Ideal& b) {
  detail::require_same_context(a, b);
  return a.basis() == b.basis();
}

/// a is contained in b.
inline bool ideal_subset(const Ideal& a, const Ideal& b) {
  detail::require_same_context(a, b);
  return b.includes(a);
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  detail::require_same_context(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.context(), std::move(gens));
}

/// Generated by all pairwise products of generators, reduced mod P.
inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
  detail::require_same_context(a, b);
  const auto& ctx = a.context();
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) {
      Polynomial p = ctx->reduce(f * g);
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  }
  Ideal::sort_unique(gens);
  return Ideal(ctx, std::move(gens));
}

/// f * a.
inline Ideal ideal_scale(const Ideal& a, const Polynomial& f) {
  return ideal_product(Ideal::principal(a.context(), f), a);
}

/// a^n with a^0 = (1). Intermediate powers are compacted, so the result is
/// the same ideal as the n-fold product presented by fewer generators.
inline Ideal ideal_power(const Ideal& a, unsigned n) {
  Ideal result = Ideal::unit(a.context());
  if (n == 0) return result;
  Ideal base = a.compact();
  result = base;
  for (unsigned k = 1; k < n; ++k) result = ideal_product(result, base).compact();
  return result;
}

inline Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  detail::require_same_context(a, b);
  const auto& ctx = a.context();
  GroebnerBasis gb = detail::intersect_ambient(ctx->nvars(), a.basis().generators, b.basis().generators);
  std::vector<Polynomial> gens;
  for (const auto& g : gb.generators) {
    Polynomial r = ctx->reduce(g);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  return Ideal(ctx, std::move(gens));
}

/// (a : b) = {f : f*b in a}. Throws std::domain_error when b is contained in P.
inline Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  detail::require_same_context(a, b);
  const auto& ctx = a.context();
  const std::size_t n = ctx->nvars();
  const auto& lifted = a.basis().generators;
  std::optional<GroebnerBasis> acc;
  // the basis of b + P usually has lower degrees than the given generators
  std::vector<Polynomial> divisors;
  for (const auto& g : b.basis().generators) {
    Polynomial r = ctx->reduce(g);
    if (!r.is_zero()) divisors.push_back(std::move(r));
  }
  Ideal::sort_unique(divisors);
  if (std::vector<Polynomial> given = b.reduced_generators(); given.size() < divisors.size()) divisors = std::move(given);
  for (const auto& raw : divisors) {
    const Polynomial gen[] = {raw};
    GroebnerBasis meet = detail::intersect_ambient(n, lifted, gen);
    std::vector<Polynomial> quot;
    quot.reserve(meet.generators.size());
    for (const auto& h : meet.generators) quot.push_back(divide_exact(h, raw));
    GroebnerBasis q = reduced_groebner_basis(n, quot);
    acc = acc ? detail::intersect_ambient(n, acc->generators, q.generators) : std::move(q);
  }
  if (!acc) throw std::domain_error("ideal quotient by an ideal contained in P (zero divisor)");
  std::vector<Polynomial> gens;
  for (const auto& g : acc->generators) {
    Polynomial r = ctx->reduce(g);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  return Ideal(ctx, std::move(gens));
}

}  // namespace nashblow
