#pragma once

#include "nashblow/determinant.hpp"
#include "nashblow/ideal.hpp"
#include "nashblow/variety.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nashblow {

/// Ordered generating sequence; unlike Ideal it keeps order and repeats.
using GeneratorSequence = std::vector<Polynomial>;

inline constexpr std::uint64_t kDefaultDeterminantCap = 20000;

/// A combinatorial enumeration would exceed the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t requested, std::uint64_t cap)
      : std::runtime_error(what + ": " + std::to_string(requested) + " items exceed cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  std::uint64_t requested() const { return requested_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

namespace detail {

// Row (f, delta_1 f, ..., delta_r f).
inline std::vector<Polynomial> jet_row(const Polynomial& f, const Foliation& fol) {
  std::vector<Polynomial> row;
  row.reserve(fol.rank() + 1);
  row.push_back(fol.ctx->reduce(f));
  for (std::size_t i = 0; i < fol.rank(); ++i) row.push_back(fol.apply(i, f));
  return row;
}

inline Ideal finish_ideal(const ContextPtr& ctx, std::vector<Polynomial> gens) {
  Ideal::sort_unique(gens);
  return Ideal(ctx, std::move(gens));
}

}  // namespace detail

/// M(f_0..f_m): ideal of all (r+1) x (r+1) determinants with rows
/// (f_i, delta_1 f_i, ..., delta_r f_i), i_0 < ... < i_r.
inline Ideal m_ideal(const GeneratorSequence& seq, const Foliation& fol,
                     std::uint64_t cap = kDefaultDeterminantCap) {
  const VarietyContext& ctx = *fol.ctx;
  const std::size_t k = fol.rank() + 1;
  if (const auto count = binomial(seq.size(), k); count > cap) throw CapExceeded("M-ideal determinants", count, cap);
  std::vector<std::vector<Polynomial>> rows;
  rows.reserve(seq.size());
  for (const auto& f : seq) rows.push_back(detail::jet_row(f, fol));
  std::vector<Polynomial> gens;
  for_each_subset(seq.size(), k, [&](const std::vector<std::size_t>& idx) {
    PolyMatrix m;
    for (auto i : idx) m.push_back(rows[i]);
    Polynomial d = det_poly(m, ctx);
    if (!d.is_zero()) gens.push_back(std::move(d));
  });
  return detail::finish_ideal(fol.ctx, std::move(gens));
}

/// Number of generator expressions j_ideal enumerates for m+1 generators.
inline std::uint64_t j_ideal_expression_count(std::size_t generators, std::size_t rank, std::size_t nvars) {
  std::uint64_t total = 0;
  for (std::size_t a = 1; a <= rank + 1; ++a) {
    const std::size_t b = rank + 1 - a;
    total += binomial(generators, a) * binomial(nvars, b) * multichoose(generators, b);
  }
  return total;
}

/// J(I) from generators f_0..f_m of I: all products f_{u_1}...f_{u_b} times
/// det of the block matrix with a rows (f_i, delta f_i) and b rows
/// (0, delta x_j), over a + b = r + 1, i's and j's strictly increasing and
/// u's an unordered multiset.
inline Ideal j_ideal(const Ideal& ideal, const Foliation& fol, std::uint64_t cap = kDefaultDeterminantCap) {
  if (ideal.context() != fol.ctx) throw std::invalid_argument("j_ideal: context mismatch");
  const VarietyContext& ctx = *fol.ctx;
  const std::vector<Polynomial> f = ideal.reduced_generators();
  const std::size_t r = fol.rank();
  const std::size_t n = ctx.nvars();
  if (f.empty()) return Ideal::zero(fol.ctx);
  if (const auto count = j_ideal_expression_count(f.size(), r, n); count > cap) {
    throw CapExceeded("J-ideal generator expressions", count, cap);
  }

  std::vector<std::vector<Polynomial>> frows;
  for (const auto& g : f) frows.push_back(detail::jet_row(g, fol));
  std::vector<std::vector<Polynomial>> xrows;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Polynomial> row{ctx.zero()};
    for (const auto& d : fol.derivations) row.push_back(ctx.reduce(d.images[j]));
    xrows.push_back(std::move(row));
  }

  std::vector<Polynomial> gens;
  for (std::size_t a = 1; a <= r + 1; ++a) {
    const std::size_t b = r + 1 - a;
    if (b > n) continue;
    // Products f_{u_1}...f_{u_b} over multisets.
    std::vector<Polynomial> products;
    for_each_multiset(f.size(), b, [&](const std::vector<std::size_t>& us) {
      Polynomial p = ctx.one();
      for (auto u : us) p = ctx.reduce(p * f[u]);
      if (!p.is_zero()) products.push_back(std::move(p));
    });
    Ideal::sort_unique(products);
    for_each_subset(f.size(), a, [&](const std::vector<std::size_t>& is) {
      for_each_subset(n, b, [&](const std::vector<std::size_t>& js) {
        PolyMatrix m;
        for (auto i : is) m.push_back(frows[i]);
        for (auto j : js) m.push_back(xrows[j]);
        Polynomial d = det_poly(m, ctx);
        if (d.is_zero()) return;
        for (const auto& p : products) {
          Polynomial g = ctx.reduce(p * d);
          if (!g.is_zero()) gens.push_back(std::move(g));
        }
      });
    });
  }
  return detail::finish_ideal(fol.ctx, std::move(gens));
}

/// seq followed by every f_i * x_j (i-major), reduced mod P.
inline GeneratorSequence extend_products(const GeneratorSequence& seq, const VarietyContext& ctx) {
  GeneratorSequence out = seq;
  for (const auto& f : seq) {
    for (std::size_t j = 0; j < ctx.nvars(); ++j) out.push_back(ctx.reduce(f * ctx.variable(j)));
  }
  return out;
}

/// seq extended by the subsums sum_i c_i f_i with c_i >= 0 and
/// 1 <= sum c_i <= d (every sub-multiset of a size-d multiset), deduplicated
/// up to nonzero scalar multiples. The d-th powers of the result generate I^d.
inline GeneratorSequence extend_powers(const GeneratorSequence& seq, unsigned d,
                                       std::uint64_t cap = kDefaultDeterminantCap) {
  if (d == 0) throw std::invalid_argument("extend_powers: d must be positive");
  const std::size_t m = seq.size();
  if (const auto count = binomial(m + d, d); count > cap) throw CapExceeded("power subsums", count, cap);

  GeneratorSequence out;
  std::vector<Polynomial> seen;
  auto add = [&](const Polynomial& p) {
    if (p.is_zero()) return;
    Polynomial key = p.monic();
    for (const auto& s : seen) {
      if (s == key) return;
    }
    seen.push_back(std::move(key));
    out.push_back(p);
  };
  for (const auto& f : seq) add(f);
  if (m == 0) return out;

  // Enumerate coefficient vectors c with 1 <= |c| <= d in graded order.
  std::vector<unsigned> c(m, 0);
  for (unsigned total = 1; total <= d; ++total) {
    for_each_multiset(m, total, [&](const std::vector<std::size_t>& idx) {
      std::fill(c.begin(), c.end(), 0U);
      for (auto i : idx) ++c[i];
      Polynomial s(seq[0].nvars(), seq[0].order());
      for (std::size_t i = 0; i < m; ++i) {
        if (c[i]) s += seq[i] * Rational(c[i]);
      }
      add(s);
    });
  }
  return out;
}

struct ToyIdeals {
  Ideal cross;  ///< (l x l'), all l_i l'_j - l_j l'_i
  Ideal toy;    ///< (l x l') + (l)^2 (v)
};

/// J_toy(l) = (l x l') + (l)^2 (v) for a single derivation on a variety in A^3.
inline ToyIdeals jtoy_ideal(const GeneratorSequence& l, const Foliation& fol) {
  const auto& ctx = fol.ctx;
  if (fol.rank() != 1) throw InputError("toy operator needs a rank-1 foliation");
  if (ctx->nvars() != 3) throw InputError("toy operator needs exactly 3 variables");
  std::vector<Polynomial> dots;
  for (const auto& x : l) dots.push_back(fol.apply(0, x));
  std::vector<Polynomial> cross;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      Polynomial c = ctx->reduce(l[i] * dots[j] - l[j] * dots[i]);
      if (!c.is_zero()) cross.push_back(std::move(c));
    }
  }
  Ideal cross_ideal = detail::finish_ideal(ctx, cross);
  Ideal seq_ideal(ctx, l);
  Ideal v(ctx, fol.derivations[0].images);
  Ideal toy = ideal_sum(cross_ideal, ideal_product(ideal_product(seq_ideal, seq_ideal), v));
  return {std::move(cross_ideal), std::move(toy)};
}

}  // namespace nashblow
