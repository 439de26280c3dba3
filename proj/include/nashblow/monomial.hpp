#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace nashblow {

/// Exponent vector x_0^e_0 ... x_{n-1}^e_{n-1}. The total degree is cached.
class Monomial {
 public:
  using Exponent = std::uint32_t;
  using Storage = boost::container::small_vector<Exponent, 8>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) { recount(); }
  explicit Monomial(Storage exps) : exps_(std::move(exps)) { recount(); }

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1) {
    Monomial m(nvars);
    m.exps_.at(index) = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const Storage& exponents() const { return exps_; }

  void set(std::size_t i, Exponent e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    r.degree_ += b.degree_;
    return r;
  }

  /// True iff `this` divides `other`.
  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial r = other;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
    r.degree_ -= degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    }
    r.recount();
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  void recount() {
    degree_ = 0;
    for (auto e : exps_) degree_ += e;
  }

  Storage exps_;
  std::uint64_t degree_ = 0;
};

/// Total, multiplicative well-orders on monomials.
struct MonomialOrder {
  enum class Kind { grevlex, lex, block_elimination };

  Kind kind = Kind::grevlex;
  /// For block_elimination: the first `block` variables are eliminated.
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {Kind::block_elimination, k}; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::lex:
        return compare_lex(a, b, 0, a.size());
      case Kind::grevlex:
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        return compare_revlex(a, b, 0, a.size());
      case Kind::block_elimination: {
        const std::size_t k = std::min(block, a.size());
        if (auto c = compare_grevlex_range(a, b, 0, k); c != 0) return c;
        return compare_grevlex_range(a, b, k, a.size());
      }
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

  std::string name() const {
    switch (kind) {
      case Kind::lex:
        return "lex";
      case Kind::grevlex:
        return "grevlex";
      case Kind::block_elimination:
        return "elim(" + std::to_string(block) + ")";
    }
    return "?";
  }

 private:
  static std::strong_ordering compare_lex(const Monomial& a, const Monomial& b,
                                          std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }

  // Reverse lexicographic tie-break: the smaller exponent in the last
  // differing variable wins.
  static std::strong_ordering compare_revlex(const Monomial& a, const Monomial& b,
                                             std::size_t lo, std::size_t hi) {
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }

  static std::strong_ordering compare_grevlex_range(const Monomial& a, const Monomial& b,
                                                    std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    return compare_revlex(a, b, lo, hi);
  }
};

}  // namespace nashblow

template <>
struct std::hash<nashblow::Monomial> {
  std::size_t operator()(const nashblow::Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : m.exponents()) {
      h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
