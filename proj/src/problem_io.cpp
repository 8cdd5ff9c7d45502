#include "fuzzopt/problem_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace fuzzopt {

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

double number(const json& v, const std::string& what, int term = -1) {
  if (!v.is_number()) throw ProblemFormatError(what + " must be a number", term);
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ProblemFormatError(what + " must be finite", term);
  return d;
}

int integer(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ProblemFormatError(what + " must be an integer");
  return v.get<int>();
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where,
                         int term = -1) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) throw ProblemFormatError(where + ": unknown key \"" + key + "\"", term);
}

Box parse_box(const json& v, int dimension, const std::string& what, bool allow_unbounded) {
  if (!v.is_array() || static_cast<int>(v.size()) != dimension)
    throw ProblemFormatError(what + " must be an array of " + std::to_string(dimension) + " [lo, hi] pairs");
  Box box;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& pair = v[i];
    const std::string where = what + "[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2) throw ProblemFormatError(where + " must be [lo, hi]");
    Interval iv;
    if (pair[0].is_null() && allow_unbounded)
      iv.lo = -kInf;
    else
      iv.lo = number(pair[0], where + " lo");
    if (pair[1].is_null() && allow_unbounded)
      iv.hi = kInf;
    else
      iv.hi = number(pair[1], where + " hi");
    if (iv.lo > iv.hi) throw ProblemFormatError(where + " has lo > hi");
    box.push_back(iv);
  }
  return box;
}

json box_to_json(const Box& box) {
  json out = json::array();
  for (const Interval& iv : box)
    out.push_back(json::array({std::isfinite(iv.lo) ? json(iv.lo) : json(nullptr),
                               std::isfinite(iv.hi) ? json(iv.hi) : json(nullptr)}));
  return out;
}

json vector_to_json(const Eigen::VectorXd& x) {
  json out = json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(x(i));
  return out;
}

bool boxes_equal(const std::optional<Box>& a, const std::optional<Box>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || *a == *b;
}

}  // namespace

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  return a.problem.objective == b.problem.objective && a.problem.sense == b.problem.sense &&
         boxes_equal(a.problem.domain, b.problem.domain) && a.solver == b.solver;
}

TriangularFuzzyNumber fuzzy_from_json(const json& value) {
  if (value.is_number()) return TriangularFuzzyNumber::crisp(number(value, "coefficient"));
  if (!value.is_array() || value.size() != 3)
    throw ProblemFormatError("fuzzy number must be [left, peak, right] or a number");
  const double l = number(value[0], "left"), p = number(value[1], "peak"), r = number(value[2], "right");
  if (!(l <= p && p <= r)) throw ProblemFormatError("fuzzy number needs left <= peak <= right");
  return {l, p, r};
}

json to_json(const TriangularFuzzyNumber& a) { return json::array({a.left(), a.peak(), a.right()}); }

TriangularFuzzyNumber parse_fuzzy_literal(std::string_view text) {
  json v;
  try {
    v = json::parse(text);
  } catch (const json::parse_error&) {
    throw ProblemFormatError("malformed fuzzy literal \"" + std::string(text) + "\"");
  }
  try {
    return fuzzy_from_json(v);
  } catch (const ProblemFormatError& e) {
    throw ProblemFormatError("malformed fuzzy literal \"" + std::string(text) + "\": " + e.what());
  }
}

ProblemFile parse_problem(const json& doc) {
  if (!doc.is_object()) throw ProblemFormatError("problem file must be a JSON object");
  reject_unknown_keys(doc, {"dimension", "sense", "terms", "domain", "solver"}, "problem");

  if (!doc.contains("dimension")) throw ProblemFormatError("problem: missing \"dimension\"");
  const int n = integer(doc["dimension"], "dimension");
  if (n < 1) throw ProblemFormatError("dimension must be positive");

  Sense sense = Sense::Minimize;
  if (doc.contains("sense")) {
    const json& s = doc["sense"];
    if (s == "minimize")
      sense = Sense::Minimize;
    else if (s == "maximize")
      sense = Sense::Maximize;
    else
      throw ProblemFormatError("sense must be \"minimize\" or \"maximize\"");
  }

  if (!doc.contains("terms") || !doc["terms"].is_array() || doc["terms"].empty())
    throw ProblemFormatError("problem: \"terms\" must be a non-empty array");
  std::vector<FuzzyTerm> terms;
  for (std::size_t t = 0; t < doc["terms"].size(); ++t) {
    const int idx = static_cast<int>(t);
    const std::string where = "term " + std::to_string(idx);
    const json& jt = doc["terms"][t];
    if (!jt.is_object()) throw ProblemFormatError(where + ": must be an object", idx);
    reject_unknown_keys(jt, {"coef", "exponents", "sign"}, where, idx);
    if (!jt.contains("coef")) throw ProblemFormatError(where + ": missing \"coef\"", idx);
    if (!jt.contains("exponents")) throw ProblemFormatError(where + ": missing \"exponents\"", idx);

    FuzzyTerm term;
    try {
      term.coefficient = fuzzy_from_json(jt["coef"]);
    } catch (const ProblemFormatError& e) {
      throw ProblemFormatError(where + ": " + e.what(), idx);
    }
    const json& ex = jt["exponents"];
    if (!ex.is_array() || static_cast<int>(ex.size()) != n)
      throw ProblemFormatError(where + ": \"exponents\" must list " + std::to_string(n) + " integers", idx);
    for (const json& e : ex) {
      if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > 64)
        throw ProblemFormatError(where + ": exponents must be integers in [0, 64]", idx);
      term.monomial.exponents.push_back(e.get<int>());
    }
    if (jt.contains("sign")) {
      const json& s = jt["sign"];
      if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1))
        throw ProblemFormatError(where + ": sign must be 1 or -1", idx);
      term.sign = s.get<int>();
    }
    terms.push_back(std::move(term));
  }

  ProblemFile file{Problem{FuzzyPolynomial(n, std::move(terms)), sense, std::nullopt}, {}};
  if (doc.contains("domain")) file.problem.domain = parse_box(doc["domain"], n, "domain", true);

  if (doc.contains("solver")) {
    const json& js = doc["solver"];
    if (!js.is_object()) throw ProblemFormatError("solver must be an object");
    reject_unknown_keys(js, {"starts", "box", "newton_tol", "max_iters", "dedupe_radius", "alpha_grid"},
                        "solver");
    SolverOverrides& o = file.solver;
    if (js.contains("starts")) {
      o.starts = integer(js["starts"], "solver.starts");
      if (*o.starts < 1) throw ProblemFormatError("solver.starts must be >= 1");
    }
    if (js.contains("box")) o.box = parse_box(js["box"], n, "solver.box", false);
    if (js.contains("newton_tol")) {
      o.newton_tol = number(js["newton_tol"], "solver.newton_tol");
      if (*o.newton_tol <= 0) throw ProblemFormatError("solver.newton_tol must be positive");
    }
    if (js.contains("max_iters")) {
      o.max_iters = integer(js["max_iters"], "solver.max_iters");
      if (*o.max_iters < 1) throw ProblemFormatError("solver.max_iters must be >= 1");
    }
    if (js.contains("dedupe_radius")) {
      o.dedupe_radius = number(js["dedupe_radius"], "solver.dedupe_radius");
      if (*o.dedupe_radius <= 0) throw ProblemFormatError("solver.dedupe_radius must be positive");
    }
    if (js.contains("alpha_grid")) {
      o.alpha_grid = integer(js["alpha_grid"], "solver.alpha_grid");
      if (*o.alpha_grid < 2 || *o.alpha_grid % 2)
        throw ProblemFormatError("solver.alpha_grid must be an even integer >= 2");
    }
  }
  return file;
}

ProblemFile parse_problem_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ProblemFormatError(std::string("problem file is not valid JSON: ") + e.what());
  }
  return parse_problem(doc);
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemFormatError("cannot open problem file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

json to_json(const ProblemFile& file) {
  const Problem& p = file.problem;
  json doc;
  doc["dimension"] = p.objective.dimension();
  doc["sense"] = to_string(p.sense);
  json terms = json::array();
  for (const FuzzyTerm& t : p.objective.terms())
    terms.push_back({{"coef", to_json(t.coefficient)}, {"exponents", t.monomial.exponents}, {"sign", t.sign}});
  doc["terms"] = std::move(terms);
  if (p.domain) doc["domain"] = box_to_json(*p.domain);

  const SolverOverrides& o = file.solver;
  json solver = json::object();
  if (o.starts) solver["starts"] = *o.starts;
  if (o.box) solver["box"] = box_to_json(*o.box);
  if (o.newton_tol) solver["newton_tol"] = *o.newton_tol;
  if (o.max_iters) solver["max_iters"] = *o.max_iters;
  if (o.dedupe_radius) solver["dedupe_radius"] = *o.dedupe_radius;
  if (o.alpha_grid) solver["alpha_grid"] = *o.alpha_grid;
  if (!solver.empty()) doc["solver"] = std::move(solver);
  return doc;
}

SolverConfig apply(const SolverOverrides& o, SolverConfig base) {
  if (o.starts) base.starts_per_axis = *o.starts;
  if (o.box) base.search_box = *o.box;
  if (o.newton_tol) base.newton_tol = *o.newton_tol;
  if (o.max_iters) base.max_iters = *o.max_iters;
  if (o.dedupe_radius) base.dedupe_radius = *o.dedupe_radius;
  if (o.alpha_grid) base.quadrature = QuadratureSpec(*o.alpha_grid);
  return base;
}

json to_json(const CriticalPointReport& r) {
  return {{"location", vector_to_json(r.location)},
          {"classification", to_string(r.classification)},
          {"definiteness", to_string(r.definiteness)},
          {"rank_value", r.rank_value},
          {"fuzzy_value", to_json(r.fuzzy_value)},
          {"gradient_residual", r.gradient_residual},
          {"oracle_residual", r.oracle_residual}};
}

json to_json(const SolveReport& report, int alpha_intervals) {
  json points = json::array();
  for (const CriticalPointReport& r : report.points) points.push_back(to_json(r));
  return {{"sense", to_string(report.sense)},
          {"alpha_intervals", alpha_intervals},
          {"critical_points", std::move(points)},
          {"incumbent", report.incumbent ? json(*report.incumbent) : json(nullptr)},
          {"note", report.note}};
}

}  // namespace fuzzopt
