#include "fuzzopt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace fuzzopt {

namespace {

constexpr double kDefaultSearchHalfWidth = 100.0;
constexpr int kMaxHalvings = 60;

// Symbolic first and second partials of m, built once per solve.
struct ScalarizedDerivatives {
  explicit ScalarizedDerivatives(const ScalarizedPolynomial& m) : m(m), gradient(gradient_m(m)) {
    hessian = hessian_m(m);
  }

  Eigen::VectorXd grad(const Eigen::VectorXd& x) const {
    Eigen::VectorXd g(m.dimension());
    for (int i = 0; i < m.dimension(); ++i) g(i) = gradient[static_cast<std::size_t>(i)](x);
    return g;
  }

  Eigen::MatrixXd hess(const Eigen::VectorXd& x) const {
    const int n = m.dimension();
    Eigen::MatrixXd h(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        h(i, j) = h(j, i) = hessian[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)](x);
    return h;
  }

  ScalarizedPolynomial m;
  std::vector<ScalarizedPolynomial> gradient;
  std::vector<std::vector<ScalarizedPolynomial>> hessian;
};

bool inside(const Box& box, const Eigen::VectorXd& x) {
  for (std::size_t i = 0; i < box.size(); ++i) {
    const double xi = x(static_cast<Eigen::Index>(i));
    const double slack_lo = 1e-9 * (1.0 + std::abs(box[i].lo));
    const double slack_hi = 1e-9 * (1.0 + std::abs(box[i].hi));
    if (xi < box[i].lo - slack_lo || xi > box[i].hi + slack_hi) return false;
  }
  return true;
}

Box effective_start_box(const Problem& p, const SolverConfig& cfg) {
  const int n = p.objective.dimension();
  Box box = cfg.search_box.empty()
                ? Box(static_cast<std::size_t>(n), Interval{-kDefaultSearchHalfWidth, kDefaultSearchHalfWidth})
                : cfg.search_box;
  if (!p.domain) return box;
  for (int i = 0; i < n; ++i) {
    const Interval& d = (*p.domain)[static_cast<std::size_t>(i)];
    Interval& b = box[static_cast<std::size_t>(i)];
    const Interval clipped{std::max(b.lo, d.lo), std::min(b.hi, d.hi)};
    if (clipped.lo <= clipped.hi) {
      b = clipped;
    } else if (std::isfinite(d.lo) && std::isfinite(d.hi)) {
      b = d;
    } else {
      // Search box misses a half-infinite domain: start next to its finite end.
      b = std::isfinite(d.lo) ? Interval{d.lo, d.lo + b.width()} : Interval{d.hi - b.width(), d.hi};
    }
  }
  return box;
}

double radical_inverse(std::uint64_t index, int base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
    f *= inv;
  }
  return r;
}

int nth_prime(int n) {
  int count = 0;
  for (int c = 2;; ++c) {
    bool prime = true;
    for (int d = 2; d * d <= c; ++d)
      if (c % d == 0) {
        prime = false;
        break;
      }
    if (prime && count++ == n) return c;
  }
}

struct NewtonResult {
  Eigen::VectorXd x;
  double residual;
  bool converged;
};

NewtonResult damped_newton(const ScalarizedDerivatives& d, Eigen::VectorXd x, const SolverConfig& cfg) {
  Eigen::VectorXd g = d.grad(x);
  double r = g.norm();
  for (int iter = 0; iter < cfg.max_iters && r > cfg.newton_tol; ++iter) {
    const Eigen::MatrixXd h = d.hess(x);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(h);
    qr.setThreshold(1e-12);
    Eigen::VectorXd step;
    if (qr.rank() == h.rows()) {
      step = qr.solve(-g);
    } else {
      // Singular Hessian: descend on ||grad m||^2 / 2, whose gradient is H g.
      step = -(h.transpose() * g);
      if (step.squaredNorm() == 0.0) step = -g;
    }
    if (!step.allFinite()) break;

    double t = 1.0;
    bool improved = false;
    for (int k = 0; k < kMaxHalvings; ++k, t *= 0.5) {
      const Eigen::VectorXd trial = x + t * step;
      const Eigen::VectorXd gt = d.grad(trial);
      const double rt = gt.norm();
      if (std::isfinite(rt) && rt < r) {
        x = trial;
        g = gt;
        r = rt;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  if (r > cfg.newton_tol) return {x, r, false};

  // A couple of full steps past the tolerance put roots at working precision.
  for (int k = 0; k < 2 && r > 0.0; ++k) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(d.hess(x));
    qr.setThreshold(1e-12);
    if (qr.rank() != x.size()) break;
    const Eigen::VectorXd trial = x + qr.solve(-g);
    const Eigen::VectorXd gt = d.grad(trial);
    if (!(gt.norm() <= r)) break;
    x = trial;
    g = gt;
    r = gt.norm();
  }
  return {x, r, true};
}

bool location_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace

void validate(const Problem& p) {
  if (!p.domain) return;
  if (static_cast<int>(p.domain->size()) != p.objective.dimension())
    throw std::invalid_argument("domain box has " + std::to_string(p.domain->size()) +
                                " coordinates, objective has dimension " +
                                std::to_string(p.objective.dimension()));
  for (std::size_t i = 0; i < p.domain->size(); ++i)
    if (!((*p.domain)[i].lo <= (*p.domain)[i].hi))
      throw std::invalid_argument("domain box coordinate " + std::to_string(i) + " has lo > hi");
}

void validate(const SolverConfig& cfg) {
  if (cfg.starts_per_axis < 1) throw std::invalid_argument("starts per axis must be >= 1");
  if (!(cfg.newton_tol > 0.0)) throw std::invalid_argument("newton tolerance must be positive");
  if (cfg.max_iters < 1) throw std::invalid_argument("max iterations must be >= 1");
  if (!(cfg.dedupe_radius > 0.0)) throw std::invalid_argument("dedupe radius must be positive");
  if (cfg.max_starts < 1) throw std::invalid_argument("max starts must be >= 1");
  for (std::size_t i = 0; i < cfg.search_box.size(); ++i) {
    const Interval& b = cfg.search_box[i];
    if (!(std::isfinite(b.lo) && std::isfinite(b.hi) && b.lo <= b.hi))
      throw std::invalid_argument("search box coordinate " + std::to_string(i) +
                                  " must be finite with lo <= hi");
  }
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::StrictLocalMin: return "StrictLocalMin";
    case Classification::StrictLocalMax: return "StrictLocalMax";
    case Classification::Saddle: return "Saddle";
    case Classification::Indeterminate: return "Indeterminate";
  }
  return "?";
}

const char* to_string(Sense s) { return s == Sense::Minimize ? "minimize" : "maximize"; }

Classification classification_from(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return Classification::StrictLocalMin;
    case Definiteness::NegativeDefinite: return Classification::StrictLocalMax;
    case Definiteness::Indefinite: return Classification::Saddle;
    case Definiteness::PositiveSemidefiniteSingular:
    case Definiteness::NegativeSemidefiniteSingular: return Classification::Indeterminate;
  }
  return Classification::Indeterminate;
}

std::vector<Eigen::VectorXd> start_points(const Problem& p, const SolverConfig& cfg) {
  validate(p);
  validate(cfg);
  const int n = p.objective.dimension();
  if (!cfg.search_box.empty() && static_cast<int>(cfg.search_box.size()) != n)
    throw std::invalid_argument("search box dimension does not match the objective");
  const Box box = effective_start_box(p, cfg);

  const int s = cfg.starts_per_axis;
  auto coordinate = [&](int axis, double u) {
    const Interval& b = box[static_cast<std::size_t>(axis)];
    return b.lo + u * (b.hi - b.lo);
  };

  std::vector<Eigen::VectorXd> starts;
  const double total = std::pow(static_cast<double>(s), n);
  if (total <= cfg.max_starts) {
    const auto count = static_cast<std::size_t>(total);
    starts.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
      Eigen::VectorXd x(n);
      std::size_t rest = idx;
      for (int axis = 0; axis < n; ++axis) {
        const int j = static_cast<int>(rest % static_cast<std::size_t>(s));
        rest /= static_cast<std::size_t>(s);
        x(axis) = coordinate(axis, s == 1 ? 0.5 : static_cast<double>(j) / (s - 1));
      }
      starts.push_back(std::move(x));
    }
  } else {
    starts.reserve(static_cast<std::size_t>(cfg.max_starts));
    for (int idx = 0; idx < cfg.max_starts; ++idx) {
      Eigen::VectorXd x(n);
      for (int axis = 0; axis < n; ++axis)
        x(axis) = coordinate(axis, radical_inverse(static_cast<std::uint64_t>(idx) + 1, nth_prime(axis)));
      starts.push_back(std::move(x));
    }
  }
  return starts;
}

double verify_necessary(const Problem& p, const Eigen::VectorXd& x, const SolverConfig& cfg) {
  const double step = kGradientStep * std::max(1.0, x.size() ? x.cwiseAbs().maxCoeff() : 0.0);
  const Eigen::VectorXd integral = integrate_alpha_vector(
      [&](double alpha) -> Eigen::VectorXd {
        const auto level_sum = [&](const Eigen::VectorXd& y) {
          return sum_of_level_functions(p.objective, y, alpha);
        };
        return alpha * finite_diff_gradient(level_sum, x, step);
      },
      cfg.quadrature);
  return integral.norm();
}

CriticalPointReport classify(const Problem& p, const Eigen::VectorXd& x, const SolverConfig& cfg) {
  const ScalarizedPolynomial m = scalarize(p.objective);
  CriticalPointReport report;
  report.location = x;
  report.gradient_residual = gradient_at(m, x).norm();
  report.definiteness = classify_definiteness(hessian_at(m, x));
  report.classification = classification_from(report.definiteness);
  report.rank_value = m(x);
  report.fuzzy_value = evaluate(p.objective, x);
  report.oracle_residual = verify_necessary(p, x, cfg);
  return report;
}

std::vector<CriticalPointReport> find_critical_points(const Problem& p, const SolverConfig& cfg) {
  const std::vector<Eigen::VectorXd> starts = start_points(p, cfg);
  const ScalarizedDerivatives derivs(scalarize(p.objective));

  std::vector<Eigen::VectorXd> roots;
  for (const Eigen::VectorXd& x0 : starts) {
    const NewtonResult r = damped_newton(derivs, x0, cfg);
    if (!r.converged) continue;
    if (p.domain && !inside(*p.domain, r.x)) continue;
    const bool duplicate = std::any_of(roots.begin(), roots.end(), [&](const Eigen::VectorXd& q) {
      return (q - r.x).cwiseAbs().maxCoeff() <= cfg.dedupe_radius;
    });
    if (!duplicate) roots.push_back(r.x);
  }
  if (roots.empty())
    throw NoCriticalPointFound("no start converged to a root of the scalarized gradient (tried " +
                               std::to_string(starts.size()) + " starts)");

  std::vector<CriticalPointReport> reports;
  reports.reserve(roots.size());
  for (const Eigen::VectorXd& x : roots) reports.push_back(classify(p, x, cfg));
  std::sort(reports.begin(), reports.end(), [](const CriticalPointReport& a, const CriticalPointReport& b) {
    if (a.rank_value != b.rank_value) return a.rank_value < b.rank_value;
    return location_less(a.location, b.location);
  });
  return reports;
}

SolveReport solve(const Problem& p, const SolverConfig& cfg) {
  SolveReport out;
  out.sense = p.sense;
  try {
    out.points = find_critical_points(p, cfg);
  } catch (const NoCriticalPointFound& e) {
    out.note = e.what();
    return out;
  }

  const Classification wanted =
      p.sense == Sense::Minimize ? Classification::StrictLocalMin : Classification::StrictLocalMax;
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    if (out.points[i].classification != wanted) continue;
    if (!out.incumbent) {
      out.incumbent = i;
      continue;
    }
    const double best = out.points[*out.incumbent].rank_value;
    const double cand = out.points[i].rank_value;
    if (p.sense == Sense::Minimize ? cand < best : cand > best) out.incumbent = i;
  }
  const std::string kind = p.sense == Sense::Minimize ? "minimizer" : "maximizer";
  if (out.incumbent)
    out.note = "incumbent is the best strict local " + kind + " found; global optimality is not certified";
  else
    out.note = "no strict local " + kind + " among " + std::to_string(out.points.size()) +
               " critical point(s)";
  return out;
}

}  // namespace fuzzopt
