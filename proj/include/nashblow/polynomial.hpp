#pragma once

#include "nashblow/monomial.hpp"
#include "nashblow/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nashblow {

struct Term {
  Monomial mono;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

/// Multivariate polynomial over Q in canonical form: nonzero coefficients,
/// pairwise distinct monomials, terms strictly descending under `order()`.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex())
      : nvars_(nvars), order_(order) {}

  static Polynomial constant(std::size_t nvars, const Rational& c,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(nvars, order);
    if (c != 0) p.terms_.push_back({Monomial(nvars), c});
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t index,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    Polynomial p(nvars, order);
    p.terms_.push_back({Monomial::variable(nvars, index), Rational(1)});
    return p;
  }

  static Polynomial monomial(const Monomial& m, const Rational& c,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(m.size(), order);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds a canonical polynomial from arbitrary (possibly repeated or zero) terms.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(nvars, order);
    for (const auto& t : terms) {
      if (t.mono.size() != nvars) throw std::invalid_argument("monomial arity mismatch");
    }
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coefficient() const { return terms_.front().coeff; }

  /// Removes and returns the leading term.
  Term pop_leading_term() {
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }

  /// Appends a term strictly smaller than every present term.
  void push_trailing_term(Term t) { terms_.push_back(std::move(t)); }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  /// Same polynomial, re-sorted under another order.
  Polynomial with_order(MonomialOrder order) const {
    Polynomial p = *this;
    p.order_ = order;
    p.sort_terms();
    return p;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading_coefficient();
    return *this * inv;
  }

  /// Gcd of the numerators over the lcm of the denominators, made positive.
  Rational content() const {
    if (is_zero()) return Rational(1);
    Integer num = 0, den = 1;
    for (const auto& t : terms_) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    return make_rational(num, den);
  }

  /// Rational multiple with coprime integer coefficients and positive
  /// leading coefficient.
  Polynomial primitive() const {
    if (is_zero()) return *this;
    Rational scale = 1 / content();
    if (leading_coefficient() < 0) scale = -scale;
    return scale == 1 ? *this : *this * scale;
  }

  /// Inserts `k` fresh variables in front of the existing ones.
  Polynomial prepend_variables(std::size_t k, MonomialOrder order) const {
    Polynomial p(nvars_ + k, order);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial::Storage e(k, 0);
      e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
      p.terms_.push_back({Monomial(std::move(e)), t.coeff});
    }
    p.sort_terms();
    return p;
  }

  /// Drops the first `k` variables; they must not occur.
  Polynomial drop_leading_variables(std::size_t k, MonomialOrder order) const {
    Polynomial p(nvars_ - k, order);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < k; ++i) {
        if (t.mono[i] != 0) throw std::logic_error("eliminated variable still present");
      }
      Monomial::Storage e(t.mono.exponents().begin() + static_cast<std::ptrdiff_t>(k),
                          t.mono.exponents().end());
      p.terms_.push_back({Monomial(std::move(e)), t.coeff});
    }
    p.sort_terms();
    return p;
  }

  bool involves_any_of_first(std::size_t k) const {
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < k; ++i) {
        if (t.mono[i] != 0) return true;
      }
    }
    return false;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, Rational(1));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, Rational(-1));
  }

  friend Polynomial operator*(const Polynomial& p, const Rational& c) {
    if (c == 0) return Polynomial(p.nvars_, p.order_);
    Polynomial r = p;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars_, a.order_);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
    Polynomial r(a.nvars_, a.order_);
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) r.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
    }
    r.canonicalize();
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// c * m * this. Multiplication by a monomial preserves term order.
  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r(nvars_, order_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  /// this - c * m * g, in one merge pass.
  Polynomial sub_mul_term(const Rational& c, const Monomial& m, const Polynomial& g) const {
    Polynomial r(nvars_, order_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    Term shifted;
    bool have = false;
    while (i < terms_.size() || j < g.terms_.size() || have) {
      if (!have && j < g.terms_.size()) {
        shifted.mono = g.terms_[j].mono * m;
        shifted.coeff = g.terms_[j].coeff * c;
        ++j;
        have = true;
      }
      if (i < terms_.size() && (!have || order_.less(shifted.mono, terms_[i].mono))) {
        r.terms_.push_back(terms_[i++]);
      } else if (have && (i >= terms_.size() || order_.less(terms_[i].mono, shifted.mono))) {
        shifted.coeff = -shifted.coeff;
        r.terms_.push_back(std::move(shifted));
        have = false;
      } else {
        Rational v = terms_[i].coeff - shifted.coeff;
        if (v != 0) r.terms_.push_back({terms_[i].mono, std::move(v)});
        ++i;
        have = false;
      }
    }
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(nvars_, Rational(1), order_);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

  Polynomial partial_derivative(std::size_t var) const {
    if (var >= nvars_) throw std::out_of_range("partial_derivative: variable index out of range");
    Polynomial r(nvars_, order_);
    for (const auto& t : terms_) {
      const auto e = t.mono[var];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(var, e - 1);
      r.terms_.push_back({std::move(m), t.coeff * e});
    }
    // Monomial orders are multiplicative, so dividing by x_var keeps the order.
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Total order on polynomials used for deterministic generator lists:
  /// compares term by term (monomial, then coefficient).
  friend bool canonical_less(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto c = a.order_.compare(a.terms_[i].mono, b.terms_[i].mono);
      if (c != 0) return c < 0;
      if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
    }
    return a.terms_.size() < b.terms_.size();
  }

 private:
  static void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomials over different rings");
    if (!(a.order_ == b.order_)) throw std::invalid_argument("polynomials under different orders");
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, const Rational& sign) {
    check_compatible(a, b);
    return a.sub_mul_term(-sign, Monomial(a.nvars_), b);
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [this](const Term& x, const Term& y) { return order_.less(y.mono, x.mono); });
  }

  void canonicalize() {
    sort_terms();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
  }

  std::size_t nvars_ = 0;
  MonomialOrder order_{};
  std::vector<Term> terms_;
};

}  // namespace nashblow
