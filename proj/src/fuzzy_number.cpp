#include "fuzzopt/fuzzy_number.hpp"

#include "fuzzopt/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

namespace fuzzopt {

namespace {

void require_same_grid(const AlphaGridFuzzyNumber& a, const AlphaGridFuzzyNumber& b) {
  if (a.intervals() != b.intervals())
    throw std::domain_error("alpha grids differ: " + std::to_string(a.intervals()) + " vs " +
                            std::to_string(b.intervals()) + " intervals");
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << '[' << iv.lo << ", " << iv.hi << ']';
}

TriangularFuzzyNumber::TriangularFuzzyNumber(double left, double peak, double right)
    : left_(left), peak_(peak), right_(right) {
  if (!std::isfinite(left) || !std::isfinite(peak) || !std::isfinite(right))
    throw std::invalid_argument("triangular fuzzy number has a non-finite component");
  if (!(left <= peak && peak <= right))
    throw std::invalid_argument("triangular fuzzy number requires left <= peak <= right");
}

std::ostream& operator<<(std::ostream& os, const TriangularFuzzyNumber& a) {
  return os << '(' << a.left() << ", " << a.peak() << ", " << a.right() << ')';
}

double membership(const TriangularFuzzyNumber& a, double r) {
  if (r < a.left() || r > a.right()) return 0.0;
  if (r == a.peak()) return 1.0;
  if (r < a.peak()) return (r - a.left()) / (a.peak() - a.left());
  return (a.right() - r) / (a.right() - a.peak());
}

Interval alpha_cut(const TriangularFuzzyNumber& a, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::domain_error("alpha must lie in [0, 1]");
  return {(1.0 - alpha) * a.left() + alpha * a.peak(),
          (1.0 - alpha) * a.right() + alpha * a.peak()};
}

AlphaGridFuzzyNumber::AlphaGridFuzzyNumber(std::vector<Interval> cuts, double tolerance)
    : cuts_(std::move(cuts)) {
  if (cuts_.size() < 2) throw std::invalid_argument("alpha grid needs at least two levels");
  for (std::size_t k = 0; k < cuts_.size(); ++k) {
    Interval& c = cuts_[k];
    if (!std::isfinite(c.lo) || !std::isfinite(c.hi))
      throw NotAFuzzyNumber("non-finite alpha-cut endpoint at level " + std::to_string(k));
    if (k > 0) {
      const Interval& prev = cuts_[k - 1];
      if (c.lo < prev.lo - tolerance || c.hi > prev.hi + tolerance)
        throw NotAFuzzyNumber("alpha-cuts are not nested at level " + std::to_string(k));
      c.lo = std::max(c.lo, prev.lo);
      c.hi = std::min(c.hi, prev.hi);
    }
    if (c.lo > c.hi) {
      if (c.lo - c.hi > tolerance)
        throw NotAFuzzyNumber("alpha-cut at level " + std::to_string(k) + " has lo > hi");
      c.lo = c.hi = 0.5 * (c.lo + c.hi);
    }
  }
}

AlphaGridFuzzyNumber AlphaGridFuzzyNumber::crisp(double value, int intervals) {
  return discretize(TriangularFuzzyNumber::crisp(value), intervals);
}

double AlphaGridFuzzyNumber::magnitude() const {
  // The support (level 0) contains every other cut.
  return std::max(std::abs(cuts_.front().lo), std::abs(cuts_.front().hi));
}

std::ostream& operator<<(std::ostream& os, const AlphaGridFuzzyNumber& a) {
  os << '{';
  for (int k = 0; k <= a.intervals(); ++k) {
    if (k) os << ", ";
    os << a.alpha(k) << ':' << a.cut(k);
  }
  return os << '}';
}

AlphaGridFuzzyNumber discretize(const TriangularFuzzyNumber& a, int intervals) {
  if (intervals < 2) throw std::invalid_argument("alpha grid needs at least 2 intervals");
  std::vector<Interval> cuts(static_cast<std::size_t>(intervals) + 1);
  for (int k = 0; k <= intervals; ++k)
    cuts[static_cast<std::size_t>(k)] = alpha_cut(a, static_cast<double>(k) / intervals);
  // Rounding in (1-alpha) L + alpha p cannot break monotonicity by more
  // than a few ulps; absorb it.
  const double slack = 4.0 * std::numeric_limits<double>::epsilon() *
                       (1.0 + std::max(std::abs(a.left()), std::abs(a.right())));
  return AlphaGridFuzzyNumber(std::move(cuts), slack);
}

AlphaGridFuzzyNumber add(const AlphaGridFuzzyNumber& a, const AlphaGridFuzzyNumber& b) {
  require_same_grid(a, b);
  std::vector<Interval> cuts(a.cuts().size());
  for (int k = 0; k <= a.intervals(); ++k)
    cuts[static_cast<std::size_t>(k)] = {a.cut(k).lo + b.cut(k).lo, a.cut(k).hi + b.cut(k).hi};
  const double slack = 4.0 * std::numeric_limits<double>::epsilon() *
                       (1.0 + a.magnitude() + b.magnitude());
  return AlphaGridFuzzyNumber(std::move(cuts), slack);
}

AlphaGridFuzzyNumber scalar_mul(double lambda, const AlphaGridFuzzyNumber& a) {
  std::vector<Interval> cuts(a.cuts().size());
  for (int k = 0; k <= a.intervals(); ++k) {
    const Interval& c = a.cut(k);
    cuts[static_cast<std::size_t>(k)] =
        lambda >= 0.0 ? Interval{lambda * c.lo, lambda * c.hi} : Interval{lambda * c.hi, lambda * c.lo};
  }
  return AlphaGridFuzzyNumber(std::move(cuts));
}

TriangularFuzzyNumber add(const TriangularFuzzyNumber& a, const TriangularFuzzyNumber& b) {
  return {a.left() + b.left(), a.peak() + b.peak(), a.right() + b.right()};
}

TriangularFuzzyNumber scalar_mul(double lambda, const TriangularFuzzyNumber& a) {
  if (lambda >= 0.0) return {lambda * a.left(), lambda * a.peak(), lambda * a.right()};
  return {lambda * a.right(), lambda * a.peak(), lambda * a.left()};
}

AlphaGridFuzzyNumber gh_difference(const AlphaGridFuzzyNumber& a, const AlphaGridFuzzyNumber& b) {
  require_same_grid(a, b);
  std::vector<Interval> cuts(a.cuts().size());
  for (int k = 0; k <= a.intervals(); ++k) {
    const double dl = a.cut(k).lo - b.cut(k).lo;
    const double du = a.cut(k).hi - b.cut(k).hi;
    cuts[static_cast<std::size_t>(k)] = {std::min(dl, du), std::max(dl, du)};
  }
  const double tolerance = kGhNestingTolerance * std::max(1.0, std::max(a.magnitude(), b.magnitude()));
  try {
    return AlphaGridFuzzyNumber(std::move(cuts), tolerance);
  } catch (const NotAFuzzyNumber& e) {
    throw NotAFuzzyNumber(std::string("gH-difference does not exist: ") + e.what());
  }
}

double distance(const AlphaGridFuzzyNumber& a, const AlphaGridFuzzyNumber& b) {
  require_same_grid(a, b);
  double d = 0.0;
  for (int k = 0; k <= a.intervals(); ++k)
    d = std::max({d, std::abs(a.cut(k).lo - b.cut(k).lo), std::abs(a.cut(k).hi - b.cut(k).hi)});
  return d;
}

Rank rank(const TriangularFuzzyNumber& a) {
  return {(a.left() + 4.0 * a.peak() + a.right()) / 6.0};
}

Rank rank(const AlphaGridFuzzyNumber& a) {
  std::vector<double> samples(a.cuts().size());
  for (int k = 0; k <= a.intervals(); ++k)
    samples[static_cast<std::size_t>(k)] = a.alpha(k) * (a.cut(k).lo + a.cut(k).hi);
  return {integrate_uniform(samples)};
}

Ordering compare(Rank a, Rank b) {
  if (a.value < b.value - kRankEquivalenceTolerance) return Ordering::Precedes;
  if (a.value > b.value + kRankEquivalenceTolerance) return Ordering::Succeeds;
  return Ordering::Equivalent;
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Precedes: return "precedes";
    case Ordering::Equivalent: return "equivalent";
    case Ordering::Succeeds: return "succeeds";
  }
  return "?";
}

}  // namespace fuzzopt
