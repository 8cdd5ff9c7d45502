#include "fuzzopt/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fuzzopt/problem_io.hpp"

namespace fuzzopt::cli {

namespace {

using nlohmann::json;

constexpr const char* kAlphaGridEnv = "FUZZOPT_ALPHA_GRID";

// Usage problems detected after argument parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoCriticalPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<int> alpha_grid_from_env() {
  const char* raw = std::getenv(kAlphaGridEnv);
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const long k = std::strtol(raw, &end, 10);
  if (*end != '\0' || k < 2 || k % 2 != 0 || k > 1'000'000)
    throw UsageError(std::string(kAlphaGridEnv) + " must be an even integer >= 2, got \"" + raw + "\"");
  return static_cast<int>(k);
}

SolverConfig base_config(const ProblemFile& file) {
  SolverConfig cfg = apply(file.solver, SolverConfig{});
  if (auto k = alpha_grid_from_env()) cfg.quadrature = QuadratureSpec(*k);
  return cfg;
}

Eigen::VectorXd point_from(const std::vector<double>& at, int dimension) {
  if (static_cast<int>(at.size()) != dimension)
    throw UsageError("--at has " + std::to_string(at.size()) + " coordinate(s), problem dimension is " +
                     std::to_string(dimension));
  return Eigen::Map<const Eigen::VectorXd>(at.data(), static_cast<Eigen::Index>(at.size()));
}

std::string format_point(const Eigen::VectorXd& x) {
  std::ostringstream os;
  os << std::setprecision(6) << '(';
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x(i);
  os << ')';
  return os.str();
}

template <class T>
std::string fmt(const T& v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

int cmd_rank(const std::vector<std::string>& literals, std::ostream& out) {
  if (literals.empty()) throw UsageError("rank needs at least one fuzzy literal");
  std::vector<TriangularFuzzyNumber> numbers;
  for (const std::string& lit : literals) numbers.push_back(parse_fuzzy_literal(lit));

  std::vector<std::size_t> order(numbers.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare(numbers[a], numbers[b]) == Ordering::Precedes;
  });

  out << std::left << std::setw(4) << "#" << std::setw(28) << "number" << "rank\n";
  for (std::size_t i = 0; i < numbers.size(); ++i)
    out << std::setw(4) << i + 1 << std::setw(28) << fmt(numbers[i]) << fmt(rank(numbers[i]).value) << '\n';
  out << "order:";
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (j) {
      const Ordering o = compare(numbers[order[j - 1]], numbers[order[j]]);
      out << (o == Ordering::Equivalent ? " ~" : " <");
    }
    out << " #" << order[j] + 1;
  }
  out << '\n';
  return kOk;
}

int cmd_eval(const std::string& path, const std::vector<double>& at, std::vector<double> alphas, bool as_json,
             std::ostream& out) {
  const ProblemFile file = load_problem_file(path);
  (void)base_config(file);  // validates the environment override
  const Eigen::VectorXd x = point_from(at, file.problem.objective.dimension());
  if (alphas.empty()) alphas = {0.0, 0.5, 1.0};
  for (double a : alphas)
    if (!(a >= 0.0 && a <= 1.0)) throw UsageError("--alphas values must lie in [0, 1]");

  const TriangularFuzzyNumber value = evaluate(file.problem.objective, x);
  const double r = rank(value).value;
  if (as_json) {
    json cuts = json::array();
    for (double a : alphas) {
      const Interval c = alpha_cut(value, a);
      cuts.push_back({{"alpha", a}, {"lo", c.lo}, {"hi", c.hi}});
    }
    json doc = {{"point", json(at)}, {"value", to_json(value)}, {"rank", r}, {"cuts", std::move(cuts)}};
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "f" << format_point(x) << " = " << fmt(value) << '\n';
  out << "rank: " << fmt(r) << '\n';
  out << std::left << std::setw(12) << "alpha" << std::setw(16) << "lower" << "upper\n";
  for (double a : alphas) {
    const Interval c = alpha_cut(value, a);
    out << std::setw(12) << fmt(a) << std::setw(16) << fmt(c.lo) << fmt(c.hi) << '\n';
  }
  return kOk;
}

int cmd_diff(const std::string& path, const std::vector<double>& at, int wrt, std::ostream& out) {
  const ProblemFile file = load_problem_file(path);
  const SolverConfig cfg = base_config(file);
  const int n = file.problem.objective.dimension();
  const Eigen::VectorXd x = point_from(at, n);
  if (wrt < 1 || wrt > n) throw UsageError("--wrt must be between 1 and " + std::to_string(n));

  GhDerivativeOptions options;
  options.alpha_intervals = cfg.quadrature.intervals();
  const AlphaGridFuzzyNumber d = gh_derivative_numeric(file.problem.objective, x, wrt - 1, options);

  out << "partial gH-derivative wrt x" << wrt << " at " << format_point(x) << '\n';
  out << "rank: " << fmt(rank(d).value) << '\n';
  out << std::left << std::setw(12) << "alpha" << std::setw(16) << "lower" << "upper\n";
  const int stride = std::max(1, d.intervals() / 8);
  for (int k = 0; k <= d.intervals(); k += stride)
    out << std::setw(12) << fmt(d.alpha(k)) << std::setw(16) << fmt(d.cut(k).lo) << fmt(d.cut(k).hi) << '\n';
  if (d.intervals() % stride != 0)
    out << std::setw(12) << 1 << std::setw(16) << fmt(d.cuts().back().lo) << fmt(d.cuts().back().hi) << '\n';
  return kOk;
}

Box box_from(const std::vector<double>& values, int n) {
  Box box;
  if (values.size() == 2) {
    box.assign(static_cast<std::size_t>(n), Interval{values[0], values[1]});
  } else if (static_cast<int>(values.size()) == 2 * n) {
    for (int i = 0; i < n; ++i) box.push_back({values[2 * static_cast<std::size_t>(i)], values[2 * static_cast<std::size_t>(i) + 1]});
  } else {
    throw UsageError("--box takes 2 values (all coordinates) or 2n values (lo hi per coordinate)");
  }
  for (const Interval& b : box)
    if (!(b.lo <= b.hi)) throw UsageError("--box needs lo <= hi");
  return box;
}

int cmd_solve(const std::string& path, std::optional<int> starts, const std::vector<double>& box,
              std::optional<double> tol, bool as_json, std::ostream& out) {
  const ProblemFile file = load_problem_file(path);
  SolverConfig cfg = base_config(file);
  const int n = file.problem.objective.dimension();
  if (starts) {
    if (*starts < 1) throw UsageError("--starts must be >= 1");
    cfg.starts_per_axis = *starts;
  }
  if (!box.empty()) cfg.search_box = box_from(box, n);
  if (tol) {
    if (!(*tol > 0.0)) throw UsageError("--tol must be positive");
    cfg.newton_tol = *tol;
  }

  const SolveReport report = solve(file.problem, cfg);
  if (report.points.empty()) throw NoCriticalPoint(report.note);
  if (as_json) {
    out << to_json(report, cfg.quadrature.intervals()).dump(2) << '\n';
  } else {
    out << "sense: " << to_string(report.sense) << "   critical points: " << report.points.size() << '\n';
    if (!report.points.empty()) {
      out << std::left << std::setw(4) << "#" << std::setw(27) << "location" << std::setw(16) << "class"
          << std::setw(15) << "rank" << std::setw(31) << "fuzzy value" << std::setw(14) << "|grad m|"
          << "oracle\n";
      for (std::size_t i = 0; i < report.points.size(); ++i) {
        const CriticalPointReport& r = report.points[i];
        out << std::setw(4) << i + 1 << std::setw(26) << format_point(r.location) << ' ' << std::setw(16)
            << to_string(r.classification) << std::setw(14) << fmt(r.rank_value) << ' ' << std::setw(30)
            << fmt(r.fuzzy_value) << ' ' << std::setw(13) << fmt(r.gradient_residual) << fmt(r.oracle_residual)
            << '\n';
      }
    }
    if (report.incumbent) out << "incumbent: #" << *report.incumbent + 1 << '\n';
    out << report.note << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy-number ranking, gH calculus and unconstrained fuzzy optimization", "fuzzopt"};
  app.require_subcommand(1);

  auto* rank_cmd = app.add_subcommand("rank", "Rank fuzzy numbers and print their total order");
  rank_cmd->allow_extras();
  rank_cmd->footer("Arguments: fuzzy literals \"[l,p,r]\" or crisp numbers");

  std::string file;
  std::vector<double> at, alphas, box;
  bool as_json = false;
  int wrt = 1;
  std::optional<int> starts;
  std::optional<double> tol;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the objective at a point");
  eval_cmd->add_option("problem", file, "Problem file (JSON)")->required();
  eval_cmd->add_option("--at", at, "Point coordinates")->required();
  eval_cmd->add_option("--alphas", alphas, "Alpha levels to tabulate");
  eval_cmd->add_flag("--json", as_json, "Emit a JSON document");

  auto* diff_cmd = app.add_subcommand("diff", "Numeric partial gH-derivative of the objective");
  diff_cmd->add_option("problem", file, "Problem file (JSON)")->required();
  diff_cmd->add_option("--at", at, "Point coordinates")->required();
  diff_cmd->add_option("--wrt", wrt, "Coordinate index, 1-based")->capture_default_str();

  auto* solve_cmd = app.add_subcommand("solve", "Find and classify critical points");
  solve_cmd->add_option("problem", file, "Problem file (JSON)")->required();
  solve_cmd->add_option("--starts", starts, "Newton starts per axis");
  solve_cmd->add_option("--box", box, "Search box: lo hi, or lo1 hi1 ... lon hin");
  solve_cmd->add_option("--tol", tol, "Newton tolerance on ||grad m||");
  solve_cmd->add_flag("--json", as_json, "Emit the full report as JSON");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("fuzzopt");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "fuzzopt: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buf;
  try {
    int code = kOk;
    if (*rank_cmd)
      code = cmd_rank(rank_cmd->remaining(), buf);
    else if (*eval_cmd)
      code = cmd_eval(file, at, alphas, as_json, buf);
    else if (*diff_cmd)
      code = cmd_diff(file, at, wrt, buf);
    else
      code = cmd_solve(file, starts, box, tol, as_json, buf);
    out << buf.str();
    return code;
  } catch (const NoCriticalPoint& e) {
    err << "fuzzopt: " << e.what() << '\n';
    return kNoCriticalPoint;
  } catch (const NoGHDerivative& e) {
    err << "fuzzopt: " << e.what() << '\n';
    return kNoGHDerivative;
  } catch (const ProblemFormatError& e) {
    err << "fuzzopt: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "fuzzopt: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "fuzzopt: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "fuzzopt: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace fuzzopt::cli
