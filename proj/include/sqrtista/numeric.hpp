#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <span>

namespace sqrtista {

namespace detail {

// Recursive halving keeps the reduction tree fixed, so a sum does not depend
// on how callers chunk or traverse the data.
template <class Term>
double pairwise_reduce(const Term& term, std::ptrdiff_t lo, std::ptrdiff_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (std::ptrdiff_t i = lo; i < hi; ++i) s += term(i);
    return s;
  }
  const std::ptrdiff_t mid = lo + (hi - lo) / 2;
  return pairwise_reduce(term, lo, mid) + pairwise_reduce(term, mid, hi);
}

}  // namespace detail

/// Pairwise sum of term(0), ..., term(n-1).
template <class Term>
double pairwise_sum(std::ptrdiff_t n, const Term& term) {
  if (n <= 0) return 0.0;
  return detail::pairwise_reduce(term, 0, n);
}

inline double squared_l2_norm(const Eigen::VectorXd& x) {
  return pairwise_sum(x.size(), [&](std::ptrdiff_t i) { return x[i] * x[i]; });
}

inline double l2_norm(const Eigen::VectorXd& x) {
  return std::sqrt(squared_l2_norm(x));
}

inline double l1_norm(const Eigen::VectorXd& x) {
  return pairwise_sum(x.size(), [&](std::ptrdiff_t i) { return std::abs(x[i]); });
}

/// Euclidean norm of the subvector x[indices]. A single index reduces to
/// std::abs so that one-element groups match the scalar formulas bit for bit.
inline double subset_l2_norm(const Eigen::VectorXd& x, std::span<const int> indices) {
  if (indices.size() == 1) return std::abs(x[indices[0]]);
  return std::sqrt(pairwise_sum(static_cast<std::ptrdiff_t>(indices.size()),
                                [&](std::ptrdiff_t i) { return x[indices[i]] * x[indices[i]]; }));
}

}  // namespace sqrtista
