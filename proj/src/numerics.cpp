#include "fuzzopt/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <string>

namespace fuzzopt {

QuadratureSpec::QuadratureSpec(int intervals) : intervals_(intervals) {
  if (intervals < 2 || intervals % 2 != 0)
    throw std::invalid_argument("quadrature needs an even number of alpha intervals >= 2, got " +
                                std::to_string(intervals));
}

double integrate_alpha(std::span<const double> samples) {
  if (samples.size() < 3 || samples.size() % 2 == 0)
    throw std::invalid_argument("composite Simpson needs K+1 samples with K even and >= 2, got " +
                                std::to_string(samples.size()) + " samples");
  return integrate_uniform(samples);
}

double integrate_uniform(std::span<const double> samples) {
  if (samples.size() < 2) throw std::invalid_argument("quadrature needs at least two samples");
  const int n = static_cast<int>(samples.size()) - 1;
  const double h = 1.0 / n;
  auto g = [&](int k) { return samples[static_cast<std::size_t>(k)]; };
  if (n == 1) return 0.5 * (g(0) + g(1));

  const int simpson_end = (n % 2 == 0) ? n : n - 3;
  double sum = 0.0;
  if (simpson_end > 0) {
    double s = g(0) + g(simpson_end);
    for (int k = 1; k < simpson_end; ++k) s += (k % 2 ? 4.0 : 2.0) * g(k);
    sum += s * h / 3.0;
  }
  if (simpson_end != n) {
    const int m = simpson_end;
    sum += 3.0 * h / 8.0 * (g(m) + 3.0 * g(m + 1) + 3.0 * g(m + 2) + g(m + 3));
  }
  return sum;
}

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive-definite";
    case Definiteness::NegativeDefinite: return "negative-definite";
    case Definiteness::PositiveSemidefiniteSingular: return "positive-semidefinite-singular";
    case Definiteness::NegativeSemidefiniteSingular: return "negative-semidefinite-singular";
    case Definiteness::Indefinite: return "indefinite";
  }
  return "?";
}

Definiteness classify_definiteness(const Eigen::MatrixXd& hessian) {
  if (hessian.rows() != hessian.cols() || hessian.rows() == 0)
    throw std::invalid_argument("definiteness test needs a non-empty square matrix");
  const double norm = hessian.norm();
  if ((hessian - hessian.transpose()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + norm))
    throw std::invalid_argument("definiteness test needs a symmetric matrix");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hessian, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue computation failed");
  const Eigen::VectorXd& lambda = solver.eigenvalues();  // ascending
  const double tau = 1e-9 * (1.0 + norm);
  const double lo = lambda.minCoeff();
  const double hi = lambda.maxCoeff();

  if (lo > tau) return Definiteness::PositiveDefinite;
  if (hi < -tau) return Definiteness::NegativeDefinite;
  if (lo >= -tau) return Definiteness::PositiveSemidefiniteSingular;
  if (hi <= tau) return Definiteness::NegativeSemidefiniteSingular;
  return Definiteness::Indefinite;
}

}  // namespace fuzzopt
