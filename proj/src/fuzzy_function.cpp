#include "fuzzopt/fuzzy_function.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace fuzzopt {

namespace {

void require_dimension(int dimension, const Eigen::VectorXd& x) {
  if (x.size() != dimension)
    throw std::invalid_argument("point has dimension " + std::to_string(x.size()) +
                                ", objective expects " + std::to_string(dimension));
}

double int_power(double base, int e) {
  double r = 1.0;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

double term_value(const Monomial& m, int sign, const Eigen::VectorXd& x) {
  return static_cast<double>(sign) * m(x);
}

}  // namespace

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

double Monomial::operator()(const Eigen::VectorXd& x) const {
  double v = 1.0;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    v *= int_power(x(static_cast<Eigen::Index>(i)), exponents[i]);
  return v;
}

Monomial Monomial::lowered(int i) const {
  Monomial m = *this;
  auto& e = m.exponents[static_cast<std::size_t>(i)];
  if (e > 0) --e;
  return m;
}

FuzzyPolynomial::FuzzyPolynomial(int dimension, std::vector<FuzzyTerm> terms)
    : dimension_(dimension), terms_(std::move(terms)) {
  if (dimension_ < 1) throw InvalidPolynomial("dimension must be positive", -1);
  if (terms_.empty()) throw InvalidPolynomial("objective needs at least one term", -1);
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    const FuzzyTerm& term = terms_[t];
    const int idx = static_cast<int>(t);
    if (term.monomial.dimension() != dimension_)
      throw InvalidPolynomial("term " + std::to_string(idx) + ": monomial has " +
                                  std::to_string(term.monomial.dimension()) + " exponents, expected " +
                                  std::to_string(dimension_),
                              idx);
    if (std::any_of(term.monomial.exponents.begin(), term.monomial.exponents.end(),
                    [](int e) { return e < 0; }))
      throw InvalidPolynomial("term " + std::to_string(idx) + ": negative exponent", idx);
    if (term.sign != 1 && term.sign != -1)
      throw InvalidPolynomial("term " + std::to_string(idx) + ": sign must be +1 or -1", idx);
  }
}

ScalarizedPolynomial::ScalarizedPolynomial(int dimension, std::vector<ScalarTerm> terms)
    : dimension_(dimension), terms_(std::move(terms)) {
  for (const ScalarTerm& t : terms_)
    if (t.monomial.dimension() != dimension_)
      throw std::invalid_argument("scalar term has the wrong number of exponents");
}

double ScalarizedPolynomial::operator()(const Eigen::VectorXd& x) const {
  require_dimension(dimension_, x);
  double v = 0.0;
  for (const ScalarTerm& t : terms_) v += t.coefficient * term_value(t.monomial, t.sign, x);
  return v;
}

TriangularFuzzyNumber evaluate(const FuzzyPolynomial& f, const Eigen::VectorXd& x) {
  require_dimension(f.dimension(), x);
  double left = 0.0, peak = 0.0, right = 0.0;
  for (const FuzzyTerm& t : f.terms()) {
    const double g = term_value(t.monomial, t.sign, x);
    const double lo = t.coefficient.left() * g;
    const double hi = t.coefficient.right() * g;
    left += std::min(lo, hi);
    peak += t.coefficient.peak() * g;
    right += std::max(lo, hi);
  }
  // Summation is exact in exact arithmetic; clamp rounding so the result is
  // a valid triangular number.
  peak = std::clamp(peak, left, right);
  return {left, peak, right};
}

Interval level_functions(const FuzzyPolynomial& f, const Eigen::VectorXd& x, double alpha) {
  require_dimension(f.dimension(), x);
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in [0, 1]");
  Interval sum{0.0, 0.0};
  for (const FuzzyTerm& t : f.terms()) {
    const Interval c = alpha_cut(t.coefficient, alpha);
    const double g = term_value(t.monomial, t.sign, x);
    if (g >= 0.0) {
      sum.lo += c.lo * g;
      sum.hi += c.hi * g;
    } else {
      sum.lo += c.hi * g;
      sum.hi += c.lo * g;
    }
  }
  return sum;
}

double sum_of_level_functions(const FuzzyPolynomial& f, const Eigen::VectorXd& x, double alpha) {
  require_dimension(f.dimension(), x);
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in [0, 1]");
  double s = 0.0;
  for (const FuzzyTerm& t : f.terms()) {
    const Interval c = alpha_cut(t.coefficient, alpha);
    s += (c.lo + c.hi) * term_value(t.monomial, t.sign, x);
  }
  return s;
}

ScalarizedPolynomial scalarize(const FuzzyPolynomial& f) {
  std::vector<ScalarTerm> terms;
  terms.reserve(f.terms().size());
  for (const FuzzyTerm& t : f.terms()) terms.push_back({rank(t.coefficient).value, t.monomial, t.sign});
  return {f.dimension(), std::move(terms)};
}

ScalarizedPolynomial partial(const ScalarizedPolynomial& m, int i) {
  if (i < 0 || i >= m.dimension()) throw std::out_of_range("coordinate index out of range");
  std::vector<ScalarTerm> terms;
  for (const ScalarTerm& t : m.terms()) {
    const int e = t.monomial.exponents[static_cast<std::size_t>(i)];
    if (e == 0 || t.coefficient == 0.0) continue;
    terms.push_back({t.coefficient * e, t.monomial.lowered(i), t.sign});
  }
  return {m.dimension(), std::move(terms)};
}

std::vector<ScalarizedPolynomial> gradient_m(const ScalarizedPolynomial& m) {
  std::vector<ScalarizedPolynomial> g;
  g.reserve(static_cast<std::size_t>(m.dimension()));
  for (int i = 0; i < m.dimension(); ++i) g.push_back(partial(m, i));
  return g;
}

std::vector<std::vector<ScalarizedPolynomial>> hessian_m(const ScalarizedPolynomial& m) {
  std::vector<std::vector<ScalarizedPolynomial>> h;
  for (const ScalarizedPolynomial& gi : gradient_m(m)) h.push_back(gradient_m(gi));
  return h;
}

Eigen::VectorXd gradient_at(const ScalarizedPolynomial& m, const Eigen::VectorXd& x) {
  require_dimension(m.dimension(), x);
  Eigen::VectorXd g(m.dimension());
  for (int i = 0; i < m.dimension(); ++i) g(i) = partial(m, i)(x);
  return g;
}

Eigen::MatrixXd hessian_at(const ScalarizedPolynomial& m, const Eigen::VectorXd& x) {
  require_dimension(m.dimension(), x);
  const int n = m.dimension();
  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i) {
    const ScalarizedPolynomial gi = partial(m, i);
    for (int j = i; j < n; ++j) h(i, j) = h(j, i) = partial(gi, j)(x);
  }
  return h;
}

AlphaGridFuzzyNumber gh_derivative_numeric(const FuzzyValuedFunction& f, const Eigen::VectorXd& x,
                                           int i, const GhDerivativeOptions& options) {
  if (i < 0 || i >= x.size()) throw std::out_of_range("coordinate index out of range");
  if (options.steps.empty()) throw std::invalid_argument("step ladder is empty");

  const AlphaGridFuzzyNumber base = f(x);
  auto shifted = [&](double h) {
    Eigen::VectorXd y = x;
    y(i) += h;
    return f(y);
  };
  auto quotient = [&](const AlphaGridFuzzyNumber& ahead, const AlphaGridFuzzyNumber& behind, double h) {
    try {
      return scalar_mul(1.0 / h, gh_difference(ahead, behind));
    } catch (const NotAFuzzyNumber& e) {
      std::ostringstream msg;
      msg << "no gH-derivative along coordinate " << i << ": difference quotient at h = " << h
          << " is not a fuzzy number (" << e.what() << ")";
      throw NoGHDerivative(msg.str(), i);
    }
  };

  std::vector<AlphaGridFuzzyNumber> central;
  AlphaGridFuzzyNumber forward = base, backward = base;
  for (double h : options.steps) {
    const AlphaGridFuzzyNumber right = shifted(h), left = shifted(-h);
    forward = quotient(right, base, h);
    backward = quotient(left, base, -h);
    central.push_back(quotient(right, left, 2 * h));
  }

  const double magnitude = std::max(forward.magnitude(), backward.magnitude());
  const double tol = options.relative_tolerance * (1.0 + magnitude);
  const double sides = distance(forward, backward);
  if (sides > tol) {
    std::ostringstream msg;
    msg << "no gH-derivative along coordinate " << i << ": one-sided quotients differ by " << sides;
    throw NoGHDerivative(msg.str(), i);
  }
  if (central.size() >= 2) {
    const double last = distance(central[central.size() - 2], central.back());
    if (last > tol) {
      std::ostringstream msg;
      msg << "no gH-derivative along coordinate " << i
          << ": difference quotients do not settle (last change " << last << ")";
      throw NoGHDerivative(msg.str(), i);
    }
  }
  return central.back();
}

AlphaGridFuzzyNumber gh_derivative_numeric(const FuzzyPolynomial& f, const Eigen::VectorXd& x, int i,
                                           const GhDerivativeOptions& options) {
  require_dimension(f.dimension(), x);
  const FuzzyValuedFunction wrapped = [&](const Eigen::VectorXd& p) {
    return discretize(evaluate(f, p), options.alpha_intervals);
  };
  return gh_derivative_numeric(wrapped, x, i, options);
}

FuzzyVector gh_gradient(const FuzzyPolynomial& f, const Eigen::VectorXd& x,
                        const GhDerivativeOptions& options) {
  FuzzyVector g;
  g.reserve(static_cast<std::size_t>(f.dimension()));
  for (int i = 0; i < f.dimension(); ++i) g.push_back(gh_derivative_numeric(f, x, i, options));
  return g;
}

}  // namespace fuzzopt
