// JSON problem files and machine-readable reports.
//
// Problem file:
//   {
//     "dimension": 2,
//     "sense": "minimize" | "maximize",
//     "terms": [ {"coef": [l, p, r] | c, "exponents": [e1, e2], "sign": 1 | -1}, ... ],
//     "domain": [[lo, hi], ...],            optional, null = unbounded end
//     "solver": {"starts": 9, "box": [[lo, hi], ...], "newton_tol": 1e-10,
//                "max_iters": 100, "dedupe_radius": 1e-6, "alpha_grid": 64}   optional
//   }
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "fuzzopt/optimizer.hpp"

namespace fuzzopt {

/// Malformed problem file or literal. `term()` is the offending term index,
/// or -1 when the error is not tied to a term.
class ProblemFormatError : public std::runtime_error {
 public:
  explicit ProblemFormatError(const std::string& what, int term = -1)
      : std::runtime_error(what), term_(term) {}
  int term() const { return term_; }

 private:
  int term_;
};

struct SolverOverrides {
  std::optional<int> starts;
  std::optional<Box> box;
  std::optional<double> newton_tol;
  std::optional<int> max_iters;
  std::optional<double> dedupe_radius;
  std::optional<int> alpha_grid;

  friend bool operator==(const SolverOverrides&, const SolverOverrides&) = default;
};

struct ProblemFile {
  Problem problem;
  SolverOverrides solver;
};

bool operator==(const ProblemFile& a, const ProblemFile& b);

ProblemFile parse_problem(const nlohmann::json& doc);
ProblemFile parse_problem_text(std::string_view text);
ProblemFile load_problem_file(const std::string& path);

/// Canonical form: coefficients always as [l, p, r], infinite domain ends
/// as null, only the overrides that are set.
nlohmann::json to_json(const ProblemFile& file);

/// Applies the overrides on top of `base`.
SolverConfig apply(const SolverOverrides& overrides, SolverConfig base);

/// "[l, p, r]" or a bare number c meaning (c, c, c).
TriangularFuzzyNumber parse_fuzzy_literal(std::string_view text);
TriangularFuzzyNumber fuzzy_from_json(const nlohmann::json& value);
nlohmann::json to_json(const TriangularFuzzyNumber& a);

nlohmann::json to_json(const CriticalPointReport& r);
nlohmann::json to_json(const SolveReport& report, int alpha_intervals);

}  // namespace fuzzopt
