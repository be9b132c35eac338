#include "sqrtista/linear_map.hpp"

#include "sqrtista/numeric.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sqrtista {

LinearMap::LinearMap(Kind kind, Eigen::MatrixXd matrix, Eigen::VectorXd kernel)
    : kind_(kind), matrix_(std::move(matrix)), kernel_(std::move(kernel)) {
  if (kind_ == Kind::Dense) {
    domain_dim_ = matrix_.cols();
    codomain_dim_ = matrix_.rows();
  } else {
    domain_dim_ = kernel_.size();
    codomain_dim_ = kernel_.size();
  }
}

LinearMap LinearMap::dense(Eigen::MatrixXd matrix) {
  if (matrix.rows() < 1 || matrix.cols() < 1)
    throw std::invalid_argument("LinearMap::dense: matrix must be nonempty");
  return LinearMap(Kind::Dense, std::move(matrix), Eigen::VectorXd());
}

LinearMap LinearMap::circular_convolution(Eigen::VectorXd kernel) {
  if (kernel.size() < 1)
    throw std::invalid_argument("LinearMap::circular_convolution: kernel must be nonempty");
  return LinearMap(Kind::Convolution1D, Eigen::MatrixXd(), std::move(kernel));
}

Eigen::VectorXd LinearMap::apply(const Eigen::VectorXd& x) const {
  if (x.size() != domain_dim_)
    throw std::invalid_argument("LinearMap::apply: expected length " +
                                std::to_string(domain_dim_) + ", got " +
                                std::to_string(x.size()));
  if (kind_ == Kind::Dense) return matrix_ * x;

  const Eigen::Index d = domain_dim_;
  Eigen::VectorXd y(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
      Eigen::Index shift = i - j;
      if (shift < 0) shift += d;
      s += kernel_[shift] * x[j];
    }
    y[i] = s;
  }
  return y;
}

Eigen::VectorXd LinearMap::apply_adjoint(const Eigen::VectorXd& y) const {
  if (y.size() != codomain_dim_)
    throw std::invalid_argument("LinearMap::apply_adjoint: expected length " +
                                std::to_string(codomain_dim_) + ", got " +
                                std::to_string(y.size()));
  if (kind_ == Kind::Dense) return matrix_.transpose() * y;

  // Adjoint of circular convolution is circular correlation.
  const Eigen::Index d = domain_dim_;
  Eigen::VectorXd x(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      Eigen::Index shift = i - j;
      if (shift < 0) shift += d;
      s += kernel_[shift] * y[i];
    }
    x[j] = s;
  }
  return x;
}

const Eigen::MatrixXd& LinearMap::matrix() const {
  if (kind_ != Kind::Dense)
    throw std::logic_error("LinearMap::matrix: not a dense operator");
  return matrix_;
}

const Eigen::VectorXd& LinearMap::kernel() const {
  if (kind_ != Kind::Convolution1D)
    throw std::logic_error("LinearMap::kernel: not a convolution operator");
  return kernel_;
}

Eigen::MatrixXd LinearMap::to_dense() const {
  if (kind_ == Kind::Dense) return matrix_;
  Eigen::MatrixXd out(codomain_dim_, domain_dim_);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(domain_dim_);
  for (Eigen::Index j = 0; j < domain_dim_; ++j) {
    e[j] = 1.0;
    out.col(j) = apply(e);
    e[j] = 0.0;
  }
  return out;
}

NormEstimate estimate_spectral_norm(const LinearMap& op, double rel_tol,
                                    int max_iter, std::uint64_t seed) {
  if (!(rel_tol > 0.0))
    throw std::invalid_argument("estimate_spectral_norm: rel_tol must be positive");
  if (max_iter < 1)
    throw std::invalid_argument("estimate_spectral_norm: max_iter must be >= 1");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd x(op.domain_dim());
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = gauss(rng);
  const double x0_norm = l2_norm(x);
  if (x0_norm == 0.0) x.setOnes();  // cannot happen for a continuous draw
  x /= l2_norm(x);

  NormEstimate est;
  double rayleigh = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    const Eigen::VectorXd z = op.apply_adjoint(op.apply(x));
    const double next = x.dot(z);  // Rayleigh quotient of A^T A at unit x
    est.iterations_used = it;
    const double zn = l2_norm(z);
    if (zn == 0.0) {
      // x is in the null space of A^T A; for a random start this only occurs
      // for the zero operator.
      est.value = 0.0;
      est.converged = true;
      return est;
    }
    if (it > 1 && std::abs(next - rayleigh) <= rel_tol * std::abs(next)) {
      rayleigh = std::max(rayleigh, next);
      est.converged = true;
      break;
    }
    rayleigh = std::max(rayleigh, next);
    x = z / zn;
  }
  est.value = std::sqrt(std::max(rayleigh, 0.0));
  return est;
}

double default_stepsize(const NormEstimate& estimate, double safety) {
  if (!(estimate.value > 0.0))
    throw std::invalid_argument("default_stepsize: zero operator norm");
  if (!(safety > 0.0) || !(safety < 2.0))
    throw std::invalid_argument("default_stepsize: safety must lie in (0, 2)");
  return safety / (estimate.value * estimate.value);
}

LinearMap load_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_matrix_csv: cannot open '" + path + "'");

  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t pos = 0;
        row.push_back(std::stod(cell, &pos));
      } catch (const std::exception&) {
        throw std::runtime_error("load_matrix_csv: bad number '" + cell + "' in '" + path + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::runtime_error("load_matrix_csv: ragged rows in '" + path + "'");
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().empty())
    throw std::runtime_error("load_matrix_csv: empty matrix in '" + path + "'");

  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return LinearMap::dense(std::move(m));
}

}  // namespace sqrtista
