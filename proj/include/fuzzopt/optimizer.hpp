// Critical points of unconstrained fuzzy-polynomial optimization problems.
//
// A point is critical when the alpha-weighted integral of the gradient of
// f_alpha^L + f_alpha^U vanishes there. For polynomial objectives that
// integral is the gradient of the scalarized polynomial m, so critical
// points are the roots of grad m, found with multi-start damped Newton and
// classified by the definiteness of the Hessian of m. An independent
// quadrature-over-alpha of finite-difference gradients re-checks each root.
#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzopt/fuzzy_function.hpp"
#include "fuzzopt/numerics.hpp"

namespace fuzzopt {

enum class Sense { Minimize, Maximize };

/// Per-coordinate closed box; infinite ends are allowed.
using Box = std::vector<Interval>;

struct Problem {
  FuzzyPolynomial objective;
  Sense sense = Sense::Minimize;
  /// Reported points are filtered to this box; starts are drawn inside it.
  std::optional<Box> domain;
};

/// Throws std::invalid_argument if the domain box has the wrong dimension
/// or an inverted coordinate.
void validate(const Problem& p);

struct SolverConfig {
  int starts_per_axis = 9;
  /// Empty means [-100, 100] on every coordinate.
  Box search_box;
  double newton_tol = 1e-10;
  int max_iters = 100;
  double dedupe_radius = 1e-6;
  QuadratureSpec quadrature{};
  /// Full start grids larger than this are replaced by a Halton set of
  /// this many points.
  int max_starts = 4096;
};

void validate(const SolverConfig& cfg);

enum class Classification { StrictLocalMin, StrictLocalMax, Saddle, Indeterminate };

const char* to_string(Classification c);
const char* to_string(Sense s);

Classification classification_from(Definiteness d);

struct CriticalPointReport {
  Eigen::VectorXd location;
  Classification classification = Classification::Indeterminate;
  Definiteness definiteness = Definiteness::PositiveSemidefiniteSingular;
  /// m(x*), the rank of the fuzzy objective value.
  double rank_value = 0.0;
  TriangularFuzzyNumber fuzzy_value;
  /// ||grad m(x*)||.
  double gradient_residual = 0.0;
  /// Norm of the alpha-quadrature of finite-difference gradients.
  double oracle_residual = 0.0;
};

struct SolveReport {
  Sense sense = Sense::Minimize;
  std::vector<CriticalPointReport> points;
  /// Index into `points` of the best strict local optimum for `sense`.
  std::optional<std::size_t> incumbent;
  std::string note;
};

class NoCriticalPointFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kOracleResidualTolerance = 1e-4;

/// Newton roots of grad m from the start grid, deduplicated, classified and
/// sorted by rank value then location. Throws NoCriticalPointFound when no
/// start converges inside the domain.
std::vector<CriticalPointReport> find_critical_points(const Problem& p, const SolverConfig& cfg = {});

/// Second-order classification of x; never consults p.sense.
CriticalPointReport classify(const Problem& p, const Eigen::VectorXd& x, const SolverConfig& cfg = {});

/// || integral_0^1 alpha grad(f_alpha^L + f_alpha^U)(x) d alpha || computed
/// from central differences of sum_of_level_functions, without scalarizing.
double verify_necessary(const Problem& p, const Eigen::VectorXd& x, const SolverConfig& cfg = {});

/// All critical points plus the incumbent (best strict local optimum for
/// the problem's sense). No global optimality is claimed.
SolveReport solve(const Problem& p, const SolverConfig& cfg = {});

/// Start points used by find_critical_points, in evaluation order.
std::vector<Eigen::VectorXd> start_points(const Problem& p, const SolverConfig& cfg);

}  // namespace fuzzopt
