#pragma once

#include "nashblow/context.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace nashblow {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

namespace detail {

// Laplace expansion along rows, memoized on the set of remaining columns.
class DeterminantEvaluator {
 public:
  DeterminantEvaluator(const PolyMatrix& m, const VarietyContext& ctx) : m_(m), ctx_(ctx) {}

  Polynomial eval(std::size_t row, std::uint32_t cols) {
    const std::size_t n = m_.size();
    if (row == n) return ctx_.one();
    if (auto it = memo_.find(cols); it != memo_.end()) return it->second;
    Polynomial acc = ctx_.zero();
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1U << c))) continue;
      const Polynomial& entry = m_[row][c];
      if (!entry.is_zero()) {
        Polynomial minor = eval(row + 1, cols & ~(1U << c));
        if (!minor.is_zero()) {
          Polynomial term = ctx_.reduce(entry * minor);
          acc = sign > 0 ? acc + term : acc - term;
        }
      }
      sign = -sign;
    }
    memo_.emplace(cols, acc);
    return acc;
  }

 private:
  const PolyMatrix& m_;
  const VarietyContext& ctx_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

}  // namespace detail

/// Determinant of a square polynomial matrix, reduced mod P after every product.
inline Polynomial det_poly(const PolyMatrix& m, const VarietyContext& ctx) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("det_poly: matrix is not square");
  }
  if (n > 24) throw std::invalid_argument("det_poly: matrix too large");
  if (n == 0) return ctx.one();
  detail::DeterminantEvaluator ev(m, ctx);
  return ctx.reduce(ev.eval(0, (1U << n) - 1));
}

/// Calls fn(indices) for every strictly increasing k-subset of {0..n-1}.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Calls fn(indices) for every non-decreasing k-multiset of {0..n-1}.
template <class Fn>
void for_each_multiset(std::size_t n, std::size_t k, Fn&& fn) {
  if (n == 0 && k > 0) return;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    fn(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[i - 1];
  }
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::uint64_t{1} << 50)) return r;  // saturates well above any cap
  }
  return r;
}

inline std::uint64_t multichoose(std::uint64_t n, std::uint64_t k) {
  if (n == 0) return k == 0 ? 1 : 0;
  return binomial(n + k - 1, k);
}

/// All k x k minors of a rows x cols matrix (k <= rows, k <= cols).
inline std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k, const VarietyContext& ctx) {
  std::vector<Polynomial> out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for_each_subset(rows, k, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
      PolyMatrix sub(k, std::vector<Polynomial>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
      }
      out.push_back(det_poly(sub, ctx));
    });
  });
  return out;
}

}  // namespace nashblow
