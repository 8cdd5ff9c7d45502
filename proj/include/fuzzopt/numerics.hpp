// Numeric kernels shared by the fuzzy calculus and the optimizer:
// quadrature over alpha in [0, 1], central finite differences and the
// eigenvalue test for symmetric matrices.
#pragma once

#include <Eigen/Dense>

#include <span>
#include <stdexcept>
#include <vector>

#include "fuzzopt/fuzzy_number.hpp"

namespace fuzzopt {

/// Composite Simpson rule with K (even, >= 2) intervals over [0, 1].
class QuadratureSpec {
 public:
  explicit QuadratureSpec(int intervals = kDefaultAlphaIntervals);

  int intervals() const { return intervals_; }
  int samples() const { return intervals_ + 1; }
  double alpha(int k) const { return static_cast<double>(k) / intervals_; }

  friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;

 private:
  int intervals_;
};

/// Integral over [0, 1] of samples taken at k / K, k = 0..K. K must be even
/// (composite Simpson); throws std::invalid_argument otherwise.
double integrate_alpha(std::span<const double> samples);

/// Like integrate_alpha but accepts any K >= 1: Simpson over the leading
/// even block, Simpson 3/8 over a trailing block of three, trapezoid for K=1.
double integrate_uniform(std::span<const double> samples);

/// Integrates a scalar function of alpha over the grid of `spec`.
template <class F>
double integrate_alpha(F&& g, const QuadratureSpec& spec) {
  std::vector<double> samples(static_cast<std::size_t>(spec.samples()));
  for (int k = 0; k < spec.samples(); ++k) samples[static_cast<std::size_t>(k)] = g(spec.alpha(k));
  return integrate_alpha(samples);
}

/// Integrates a vector-valued function of alpha componentwise.
template <class F>
Eigen::VectorXd integrate_alpha_vector(F&& g, const QuadratureSpec& spec) {
  const int n = spec.intervals();
  const double h = 1.0 / n;
  Eigen::VectorXd acc;
  for (int k = 0; k <= n; ++k) {
    const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    Eigen::VectorXd v = g(spec.alpha(k));
    if (k == 0) acc = Eigen::VectorXd::Zero(v.size());
    acc += w * v;
  }
  return acc * (h / 3.0);
}

enum class Definiteness {
  PositiveDefinite,
  NegativeDefinite,
  PositiveSemidefiniteSingular,
  NegativeSemidefiniteSingular,
  Indefinite,
};

const char* to_string(Definiteness d);

/// Eigenvalue signs of a symmetric matrix, with zero band
/// tau = 1e-9 (1 + ||H||). The zero matrix is PositiveSemidefiniteSingular.
/// Throws std::invalid_argument for non-square or non-symmetric input.
Definiteness classify_definiteness(const Eigen::MatrixXd& hessian);

inline constexpr double kGradientStep = 1e-6;
inline constexpr double kHessianStep = 1e-4;

/// Central-difference gradient of a scalar function of an Eigen vector.
template <class F>
Eigen::VectorXd finite_diff_gradient(F&& m, const Eigen::VectorXd& x, double step = kGradientStep) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe(i) = x(i) + step;
    const double up = m(probe);
    probe(i) = x(i) - step;
    const double down = m(probe);
    probe(i) = x(i);
    g(i) = (up - down) / (2.0 * step);
  }
  return g;
}

/// Central-difference Hessian, symmetrized as (H + H^T) / 2.
template <class F>
Eigen::MatrixXd finite_diff_hessian(F&& m, const Eigen::VectorXd& x, double step = kHessianStep) {
  const Eigen::Index n = x.size();
  Eigen::MatrixXd h(n, n);
  Eigen::VectorXd probe = x;
  auto at = [&](Eigen::Index i, double si, Eigen::Index j, double sj) {
    probe = x;
    probe(i) += si * step;
    probe(j) += sj * step;
    return m(probe);
  };
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      h(i, j) = (at(i, 1, j, 1) - at(i, 1, j, -1) - at(i, -1, j, 1) + at(i, -1, j, -1)) /
                (4.0 * step * step);
  return 0.5 * (h + h.transpose());
}

}  // namespace fuzzopt
