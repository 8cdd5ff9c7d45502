// Fuzzy-valued polynomial objectives over R^n and their calculus.
//
// A FuzzyPolynomial is a sum of terms c_i (.) s_i x^{e_i} where c_i is a
// triangular fuzzy number, s_i = +-1 and x^{e_i} a real monomial. Each
// term's alpha-cut is [min(cL g, cU g), max(cL g, cU g)] with g = s x^e, so
// the level functions switch formula with the sign of g, but their sum
// does not. Integrating alpha times that sum gives the crisp polynomial
// whose coefficients are the ranks of the c_i (the "scalarized" objective).
#pragma once

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzopt/fuzzy_number.hpp"
#include "fuzzopt/numerics.hpp"

namespace fuzzopt {

/// x_1^{e_1} ... x_n^{e_n} with nonnegative exponents.
struct Monomial {
  std::vector<int> exponents;

  int dimension() const { return static_cast<int>(exponents.size()); }
  int degree() const;
  double operator()(const Eigen::VectorXd& x) const;
  /// Exponent of coordinate i lowered by one; callers scale by the old exponent.
  Monomial lowered(int i) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct FuzzyTerm {
  TriangularFuzzyNumber coefficient;
  Monomial monomial;
  int sign = 1;

  friend bool operator==(const FuzzyTerm&, const FuzzyTerm&) = default;
};

/// Raised on malformed polynomials. `term()` is the offending term index or
/// -1 when the problem is not tied to one term.
class InvalidPolynomial : public std::invalid_argument {
 public:
  InvalidPolynomial(const std::string& what, int term)
      : std::invalid_argument(what), term_(term) {}
  int term() const { return term_; }

 private:
  int term_;
};

class FuzzyPolynomial {
 public:
  /// Throws InvalidPolynomial for an empty term list, a non-positive
  /// dimension, mismatched monomial lengths, negative exponents or a sign
  /// other than +-1.
  FuzzyPolynomial(int dimension, std::vector<FuzzyTerm> terms);

  int dimension() const { return dimension_; }
  const std::vector<FuzzyTerm>& terms() const { return terms_; }

  friend bool operator==(const FuzzyPolynomial&, const FuzzyPolynomial&) = default;

 private:
  int dimension_;
  std::vector<FuzzyTerm> terms_;
};

struct ScalarTerm {
  double coefficient = 0.0;
  Monomial monomial;
  int sign = 1;
};

/// Crisp polynomial sum_i sign_i * coefficient_i * x^{e_i}.
class ScalarizedPolynomial {
 public:
  ScalarizedPolynomial(int dimension, std::vector<ScalarTerm> terms);

  int dimension() const { return dimension_; }
  const std::vector<ScalarTerm>& terms() const { return terms_; }
  double operator()(const Eigen::VectorXd& x) const;

 private:
  int dimension_;
  std::vector<ScalarTerm> terms_;
};

/// Component i holds the partial gH-derivative along coordinate i.
using FuzzyVector = std::vector<AlphaGridFuzzyNumber>;

/// Closed-form value f(x). Throws std::invalid_argument on dimension mismatch.
TriangularFuzzyNumber evaluate(const FuzzyPolynomial& f, const Eigen::VectorXd& x);

/// (f_alpha^L(x), f_alpha^U(x)) from the sign-split term formulas.
Interval level_functions(const FuzzyPolynomial& f, const Eigen::VectorXd& x, double alpha);

/// f_alpha^L(x) + f_alpha^U(x) = sum_i (cL_{i,alpha} + cU_{i,alpha}) g_i(x).
double sum_of_level_functions(const FuzzyPolynomial& f, const Eigen::VectorXd& x, double alpha);

/// Replaces every coefficient by its rank.
ScalarizedPolynomial scalarize(const FuzzyPolynomial& f);

/// Exact partial derivative along coordinate i.
ScalarizedPolynomial partial(const ScalarizedPolynomial& m, int i);
std::vector<ScalarizedPolynomial> gradient_m(const ScalarizedPolynomial& m);
/// Row-major n x n; entry (i, j) is d/dx_j of d/dx_i.
std::vector<std::vector<ScalarizedPolynomial>> hessian_m(const ScalarizedPolynomial& m);

Eigen::VectorXd gradient_at(const ScalarizedPolynomial& m, const Eigen::VectorXd& x);
Eigen::MatrixXd hessian_at(const ScalarizedPolynomial& m, const Eigen::VectorXd& x);

/// Raised when a difference quotient is not a fuzzy number or the one-sided
/// limits disagree.
class NoGHDerivative : public std::domain_error {
 public:
  NoGHDerivative(const std::string& what, int coordinate)
      : std::domain_error(what), coordinate_(coordinate) {}
  int coordinate() const { return coordinate_; }

 private:
  int coordinate_;
};

struct GhDerivativeOptions {
  int alpha_intervals = kDefaultAlphaIntervals;
  std::vector<double> steps{1e-2, 1e-3, 1e-4, 1e-5};
  /// Agreement tolerance is relative_tolerance * (1 + magnitude).
  double relative_tolerance = 1e-4;
};

using FuzzyValuedFunction = std::function<AlphaGridFuzzyNumber(const Eigen::VectorXd&)>;

/// Partial gH-derivative along coordinate i of any fuzzy-valued function,
/// estimated from forward and backward gH difference quotients over the
/// decreasing step ladder. Returns the central estimate at the smallest step.
AlphaGridFuzzyNumber gh_derivative_numeric(const FuzzyValuedFunction& f, const Eigen::VectorXd& x,
                                           int i, const GhDerivativeOptions& options = {});

AlphaGridFuzzyNumber gh_derivative_numeric(const FuzzyPolynomial& f, const Eigen::VectorXd& x, int i,
                                           const GhDerivativeOptions& options = {});

FuzzyVector gh_gradient(const FuzzyPolynomial& f, const Eigen::VectorXd& x,
                        const GhDerivativeOptions& options = {});

}  // namespace fuzzopt
