#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace sqrtista {

/// A real linear operator A : R^d -> R^m with forward and adjoint
/// application. Two concrete kinds are supported: a dense m-by-d matrix and a
/// 1-D circular convolution (m = d) whose adjoint is circular correlation.
/// Instances are immutable after construction and safe to share across
/// threads.
class LinearMap {
 public:
  enum class Kind { Dense, Convolution1D };

  static LinearMap dense(Eigen::MatrixXd matrix);
  static LinearMap circular_convolution(Eigen::VectorXd kernel);

  Kind kind() const { return kind_; }
  Eigen::Index domain_dim() const { return domain_dim_; }
  Eigen::Index codomain_dim() const { return codomain_dim_; }

  /// Ax. Throws std::invalid_argument on a dimension mismatch.
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

  /// A^T y. Throws std::invalid_argument on a dimension mismatch.
  Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& y) const;

  /// Dense payload; only valid for Kind::Dense.
  const Eigen::MatrixXd& matrix() const;
  /// Convolution kernel; only valid for Kind::Convolution1D.
  const Eigen::VectorXd& kernel() const;

  /// The operator materialised as a dense m-by-d matrix (columns are A e_j).
  Eigen::MatrixXd to_dense() const;

 private:
  LinearMap(Kind kind, Eigen::MatrixXd matrix, Eigen::VectorXd kernel);

  Kind kind_;
  Eigen::Index domain_dim_;
  Eigen::Index codomain_dim_;
  Eigen::MatrixXd matrix_;
  Eigen::VectorXd kernel_;
};

/// Result of power iteration on A^T A.
///
/// `value` estimates the spectral norm ||A|| and never exceeds it in exact
/// arithmetic (Rayleigh quotients underestimate), so callers that need an
/// upper bound should inflate by (1 + 5 * rel_tol).
struct NormEstimate {
  double value = 0.0;
  int iterations_used = 0;
  bool converged = false;
};

/// Power iteration for ||A|| from a seeded random start. Stops once two
/// successive Rayleigh-quotient estimates of ||A||^2 agree to rel_tol
/// relatively; non-convergence within max_iter is reported via
/// `converged = false` with the last estimate still returned.
NormEstimate estimate_spectral_norm(const LinearMap& op, double rel_tol = 1e-10,
                                    int max_iter = 1000, std::uint64_t seed = 0);

/// Stepsize tau = safety / ||A||^2 from a norm estimate. The default
/// safety = 0.98 keeps every run inside the tau <= 1/||A||^2 regime required
/// by the convergence-rate bound even when the estimate slightly undershoots;
/// safety may range over (0, 2).
double default_stepsize(const NormEstimate& estimate, double safety = 0.98);

/// Loads a dense operator from a header-free CSV file of comma-separated
/// decimals, one matrix row per line.
LinearMap load_matrix_csv(const std::string& path);

}  // namespace sqrtista
