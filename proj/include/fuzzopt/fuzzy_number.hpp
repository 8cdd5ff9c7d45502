// Fuzzy numbers on the real line: triangular numbers, alpha-cut grids,
// levelwise arithmetic, the generalized Hukuhara difference, the supremum
// Hausdorff metric and the integral ranking functional that induces a total
// order on fuzzy numbers.
#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace fuzzopt {

/// Number of uniform alpha intervals used when nothing else is requested.
inline constexpr int kDefaultAlphaIntervals = 64;

/// Raised when a levelwise construction does not yield nested alpha-cuts.
class NotAFuzzyNumber : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Closed interval [lo, hi] with lo <= hi.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr double width() const { return hi - lo; }
  friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

/// Triangular fuzzy number (left, peak, right) with piecewise-linear
/// membership. Degenerate sides are allowed; (c, c, c) is the crisp c.
class TriangularFuzzyNumber {
 public:
  TriangularFuzzyNumber() = default;
  /// Throws std::invalid_argument unless left <= peak <= right, all finite.
  TriangularFuzzyNumber(double left, double peak, double right);

  static TriangularFuzzyNumber crisp(double value) { return {value, value, value}; }

  double left() const { return left_; }
  double peak() const { return peak_; }
  double right() const { return right_; }
  bool is_crisp() const { return left_ == peak_ && peak_ == right_; }

  friend bool operator==(const TriangularFuzzyNumber&, const TriangularFuzzyNumber&) = default;

 private:
  double left_ = 0.0;
  double peak_ = 0.0;
  double right_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const TriangularFuzzyNumber& a);

/// Membership grade of r; 1 on a degenerate side, 0 outside the support.
double membership(const TriangularFuzzyNumber& a, double r);

/// [(1-alpha) left + alpha peak, (1-alpha) right + alpha peak].
/// Throws std::domain_error for alpha outside [0, 1].
Interval alpha_cut(const TriangularFuzzyNumber& a, double alpha);

/// A fuzzy number given by its alpha-cuts on the uniform grid k / K,
/// k = 0..K. Cut lower ends are nondecreasing and upper ends nonincreasing
/// in alpha.
class AlphaGridFuzzyNumber {
 public:
  /// `cuts[k]` is the cut at alpha = k / (cuts.size() - 1). Violations of
  /// nestedness no larger than `tolerance` are absorbed by clamping; larger
  /// ones throw NotAFuzzyNumber. At least two cuts are required.
  explicit AlphaGridFuzzyNumber(std::vector<Interval> cuts, double tolerance = 0.0);

  static AlphaGridFuzzyNumber crisp(double value, int intervals = kDefaultAlphaIntervals);

  /// K, the number of alpha intervals.
  int intervals() const { return static_cast<int>(cuts_.size()) - 1; }
  double alpha(int k) const { return static_cast<double>(k) / intervals(); }
  const Interval& cut(int k) const { return cuts_[static_cast<std::size_t>(k)]; }
  std::span<const Interval> cuts() const { return cuts_; }

  /// Largest |endpoint| over all levels, i.e. the support's magnitude.
  double magnitude() const;

  friend bool operator==(const AlphaGridFuzzyNumber&, const AlphaGridFuzzyNumber&) = default;

 private:
  std::vector<Interval> cuts_;
};

std::ostream& operator<<(std::ostream& os, const AlphaGridFuzzyNumber& a);

/// Samples alpha_cut on the grid k / intervals. Requires intervals >= 2.
AlphaGridFuzzyNumber discretize(const TriangularFuzzyNumber& a,
                                int intervals = kDefaultAlphaIntervals);

// Levelwise arithmetic. Binary operations throw std::domain_error when the
// operands live on different grids.
AlphaGridFuzzyNumber add(const AlphaGridFuzzyNumber& a, const AlphaGridFuzzyNumber& b);
AlphaGridFuzzyNumber scalar_mul(double lambda, const AlphaGridFuzzyNumber& a);
TriangularFuzzyNumber add(const TriangularFuzzyNumber& a, const TriangularFuzzyNumber& b);
TriangularFuzzyNumber scalar_mul(double lambda, const TriangularFuzzyNumber& a);

/// Generalized Hukuhara difference a -gH b. Levelwise candidate
/// [min(aL-bL, aU-bU), max(aL-bL, aU-bU)]; throws NotAFuzzyNumber when the
/// candidate cuts are not nested beyond rounding.
AlphaGridFuzzyNumber gh_difference(const AlphaGridFuzzyNumber& a, const AlphaGridFuzzyNumber& b);

/// Absolute nestedness slack forgiven by gh_difference: 1e-12 scaled by
/// the operands' magnitude (at least 1).
inline constexpr double kGhNestingTolerance = 1e-12;

/// sup over levels of max(|aL - bL|, |aU - bU|).
double distance(const AlphaGridFuzzyNumber& a, const AlphaGridFuzzyNumber& b);

/// Value of the ranking functional: integral over [0, 1] of
/// alpha * (cut.lo + cut.hi).
struct Rank {
  double value = 0.0;
  friend constexpr auto operator<=>(const Rank&, const Rank&) = default;
};

/// Closed form (left + 4 peak + right) / 6.
Rank rank(const TriangularFuzzyNumber& a);
/// Composite Simpson over the grid (Simpson 3/8 closes an odd grid).
Rank rank(const AlphaGridFuzzyNumber& a);

enum class Ordering { Precedes, Equivalent, Succeeds };

inline constexpr double kRankEquivalenceTolerance = 1e-12;

Ordering compare(Rank a, Rank b);

template <class A, class B>
  requires requires(const A& a, const B& b) {
    rank(a);
    rank(b);
  }
Ordering compare(const A& a, const B& b) {
  return compare(rank(a), rank(b));
}

const char* to_string(Ordering o);

}  // namespace fuzzopt
