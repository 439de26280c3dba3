#pragma once

#include "nashblow/context.hpp"
#include "nashblow/determinant.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nashblow {

/// A derivation of R, determined by its images on the ring variables:
/// images[j] = delta(x_j).
struct Derivation {
  std::vector<Polynomial> images;

  static Derivation parse(const VarietyContext& ctx, std::span<const std::string> texts) {
    if (texts.size() != ctx.nvars()) {
      throw InputError("derivation needs " + std::to_string(ctx.nvars()) + " images, got " +
                       std::to_string(texts.size()));
    }
    Derivation d;
    for (const auto& t : texts) d.images.push_back(ctx.parse(t));
    return d;
  }
  static Derivation parse(const VarietyContext& ctx, std::initializer_list<std::string> texts) {
    std::vector<std::string> v(texts);
    return parse(ctx, std::span<const std::string>(v));
  }

  bool is_zero(const VarietyContext& ctx) const {
    for (const auto& g : images) {
      if (!ctx.is_zero_mod_p(g)) return false;
    }
    return true;
  }
};

/// delta(f) = sum_j (df/dx_j) * delta(x_j), as a normal form mod P.
inline Polynomial derivation_apply(const Derivation& d, const Polynomial& f, const VarietyContext& ctx) {
  if (d.images.size() != ctx.nvars()) throw std::invalid_argument("derivation arity mismatch");
  Polynomial acc = ctx.zero();
  for (std::size_t j = 0; j < ctx.nvars(); ++j) {
    if (d.images[j].is_zero()) continue;
    Polynomial partial = f.partial_derivative(j);
    if (!partial.is_zero()) acc += partial * d.images[j];
  }
  return ctx.reduce(acc);
}

/// Tangency: delta maps every generator of P into P.
inline bool derivation_validate(const Derivation& d, const VarietyContext& ctx) {
  if (d.images.size() != ctx.nvars()) return false;
  for (const auto& g : ctx.p_generators()) {
    if (!derivation_apply(d, g, ctx).is_zero()) return false;
  }
  return true;
}

/// [d1, d2](x_j) = d1(d2(x_j)) - d2(d1(x_j)), reduced mod P.
inline Derivation lie_bracket(const Derivation& d1, const Derivation& d2, const VarietyContext& ctx) {
  Derivation out;
  out.images.reserve(ctx.nvars());
  for (std::size_t j = 0; j < ctx.nvars(); ++j) {
    out.images.push_back(
        ctx.reduce(derivation_apply(d1, d2.images[j], ctx) - derivation_apply(d2, d1.images[j], ctx)));
  }
  return out;
}

/// Thrown when a foliation contains a derivation not tangent to V.
class InvalidDerivation : public InputError {
 public:
  InvalidDerivation(std::size_t index, const std::string& name)
      : InputError("derivation '" + name + "' (#" + std::to_string(index) + ") is not tangent to V"),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Foliation L spanned over K by r derivations delta_1..delta_r.
struct Foliation {
  ContextPtr ctx;
  std::vector<Derivation> derivations;
  std::vector<std::string> names;

  Foliation() = default;
  Foliation(ContextPtr c, std::vector<Derivation> ds, std::vector<std::string> ns = {})
      : ctx(std::move(c)), derivations(std::move(ds)), names(std::move(ns)) {
    if (!ctx) throw std::invalid_argument("foliation without context");
    if (derivations.empty()) throw InputError("a foliation needs at least one derivation");
    if (names.empty()) {
      for (std::size_t i = 0; i < derivations.size(); ++i) names.push_back("d" + std::to_string(i + 1));
    }
    if (names.size() != derivations.size()) throw std::invalid_argument("foliation names/derivations mismatch");
  }

  std::size_t rank() const { return derivations.size(); }

  /// r x n matrix [delta_i(x_j)], reduced mod P.
  PolyMatrix coefficient_matrix() const {
    PolyMatrix m;
    for (const auto& d : derivations) {
      std::vector<Polynomial> row;
      for (const auto& g : d.images) row.push_back(ctx->reduce(g));
      m.push_back(std::move(row));
    }
    return m;
  }

  Polynomial apply(std::size_t i, const Polynomial& f) const { return derivation_apply(derivations[i], f, *ctx); }
};

struct FoliationReport {
  /// Per-derivation tangency.
  std::vector<bool> tangent;
  /// Some r x r minor of [delta_i(x_j)] is nonzero mod P.
  bool rank_ok = false;
  std::optional<Polynomial> rank_witness;
  /// Every (r+1) x (r+1) minor of (delta_1..delta_r, [delta_i, delta_j]) lies in P.
  bool closure_ok = false;
  /// First failing bracket (i, j) when closure fails.
  std::optional<std::pair<std::size_t, std::size_t>> closure_failure;

  bool valid() const { return rank_ok && closure_ok; }
};

/// Generic rank and Lie closure, both decided by minors mod P. Throws
/// InvalidDerivation for a derivation that is not tangent.
inline FoliationReport foliation_validate(const Foliation& f) {
  const VarietyContext& ctx = *f.ctx;
  FoliationReport rep;
  for (std::size_t i = 0; i < f.rank(); ++i) {
    const bool ok = derivation_validate(f.derivations[i], ctx);
    rep.tangent.push_back(ok);
    if (!ok) throw InvalidDerivation(i, f.names[i]);
  }
  const std::size_t r = f.rank();
  const std::size_t n = ctx.nvars();
  const PolyMatrix base = f.coefficient_matrix();
  if (r <= n) {
    for (auto& m : minors(base, r, ctx)) {
      if (!m.is_zero()) {
        rep.rank_ok = true;
        rep.rank_witness = std::move(m);
        break;
      }
    }
  }
  rep.closure_ok = true;
  for (std::size_t i = 0; i < r && rep.closure_ok; ++i) {
    for (std::size_t j = i + 1; j < r && rep.closure_ok; ++j) {
      if (r + 1 > n) break;
      PolyMatrix stacked = base;
      stacked.push_back(lie_bracket(f.derivations[i], f.derivations[j], ctx).images);
      for (const auto& m : minors(stacked, r + 1, ctx)) {
        if (!m.is_zero()) {
          rep.closure_ok = false;
          rep.closure_failure = std::make_pair(i, j);
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace nashblow
