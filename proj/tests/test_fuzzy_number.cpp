#include "doctest.h"

#include <cmath>

#include "fuzzopt/fuzzy_number.hpp"
#include "generators.hpp"

using namespace fuzzopt;
using fuzzopt::testing::Rng;
using fuzzopt::testing::random_triangular;
using fuzzopt::testing::uniform;

namespace {

// Level set {r : membership(a, r) >= alpha} found by bisection on the
// membership function alone.
Interval level_set_by_bisection(const TriangularFuzzyNumber& a, double alpha) {
  auto edge = [&](double inside, double outside) {
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (inside + outside);
      (membership(a, mid) >= alpha ? inside : outside) = mid;
    }
    return inside;
  };
  const double pad = 1.0 + std::abs(a.left()) + std::abs(a.right());
  return {edge(a.peak(), a.left() - pad), edge(a.peak(), a.right() + pad)};
}

// Midpoint rule with a fine grid, independent of the Simpson path.
double rank_by_midpoint(const TriangularFuzzyNumber& a, int n = 200000) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double alpha = (i + 0.5) / n;
    const double lo = (1 - alpha) * a.left() + alpha * a.peak();
    const double hi = (1 - alpha) * a.right() + alpha * a.peak();
    s += alpha * (lo + hi);
  }
  return s / n;
}

void check_nested(const AlphaGridFuzzyNumber& a) {
  for (int k = 0; k <= a.intervals(); ++k) {
    CHECK(a.cut(k).lo <= a.cut(k).hi);
    if (k > 0) {
      CHECK(a.cut(k).lo >= a.cut(k - 1).lo);
      CHECK(a.cut(k).hi <= a.cut(k - 1).hi);
    }
  }
}

bool same_cuts(const AlphaGridFuzzyNumber& a, const AlphaGridFuzzyNumber& b, double tol) {
  return a.intervals() == b.intervals() && distance(a, b) <= tol;
}

const TriangularFuzzyNumber kA{0, 1, 3};
const TriangularFuzzyNumber kB{1, 2, 4};
const TriangularFuzzyNumber kMinus12{-13, -12, -11};

}  // namespace

TEST_CASE("triangular construction rejects unordered components") {
  CHECK_THROWS_AS(TriangularFuzzyNumber(1, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(TriangularFuzzyNumber(0, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(TriangularFuzzyNumber(0, NAN, 3), std::invalid_argument);
  CHECK_NOTHROW(TriangularFuzzyNumber(2, 2, 2));
  CHECK(TriangularFuzzyNumber::crisp(5).is_crisp());
}

TEST_CASE("membership grades") {
  CHECK(membership(kA, 1) == 1.0);
  CHECK(membership(kA, 2) == doctest::Approx(0.5));
  CHECK(membership(kA, -1) == 0.0);
  CHECK(membership(kA, 0.5) == doctest::Approx(0.5));
  CHECK(membership(kA, 3.5) == 0.0);

  SUBCASE("degenerate sides") {
    const TriangularFuzzyNumber left_flat{1, 1, 3}, right_flat{0, 2, 2}, crisp{4, 4, 4};
    CHECK(membership(left_flat, 1) == 1.0);
    CHECK(membership(left_flat, 2) == doctest::Approx(0.5));
    CHECK(membership(right_flat, 2) == 1.0);
    CHECK(membership(right_flat, 1) == doctest::Approx(0.5));
    CHECK(membership(crisp, 4) == 1.0);
    CHECK(membership(crisp, 4.001) == 0.0);
  }
}

TEST_CASE("alpha cuts") {
  CHECK(alpha_cut(kA, 1) == Interval{1, 1});
  CHECK(alpha_cut(kA, 0) == Interval{0, 3});
  CHECK(alpha_cut(kA, 0.5) == Interval{0.5, 2});
  CHECK_THROWS_AS(alpha_cut(kA, 1.5), std::domain_error);
  CHECK_THROWS_AS(alpha_cut(kA, -0.1), std::domain_error);

  SUBCASE("agree with level sets of the membership function") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const TriangularFuzzyNumber a = random_triangular(rng);
      const double alpha = uniform(rng, 0.01, 1.0);
      const Interval want = level_set_by_bisection(a, alpha);
      const Interval got = alpha_cut(a, alpha);
      CHECK(got.lo == doctest::Approx(want.lo).epsilon(1e-9).scale(1.0));
      CHECK(got.hi == doctest::Approx(want.hi).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("discretize samples the uniform grid") {
  const AlphaGridFuzzyNumber a = discretize(kA, 2);
  REQUIRE(a.intervals() == 2);
  CHECK(a.alpha(1) == 0.5);
  CHECK(a.cut(0) == Interval{0, 3});
  CHECK(a.cut(1) == Interval{0.5, 2});
  CHECK(a.cut(2) == Interval{1, 1});

  const AlphaGridFuzzyNumber b = discretize(kMinus12, 2);
  CHECK(b.cut(0) == Interval{-13, -11});
  CHECK(b.cut(1) == Interval{-12.5, -11.5});
  CHECK(b.cut(2) == Interval{-12, -12});

  const AlphaGridFuzzyNumber c = discretize(TriangularFuzzyNumber::crisp(7.25), 16);
  for (const Interval& cut : c.cuts()) CHECK(cut == Interval{7.25, 7.25});

  CHECK_THROWS_AS(discretize(kA, 1), std::invalid_argument);
  check_nested(discretize(kA));
}

TEST_CASE("grid construction enforces nestedness") {
  CHECK_THROWS_AS(AlphaGridFuzzyNumber({{0, 3}, {-1, 2}}), NotAFuzzyNumber);
  CHECK_THROWS_AS(AlphaGridFuzzyNumber({{0, 3}, {1, 4}}), NotAFuzzyNumber);
  CHECK_THROWS_AS(AlphaGridFuzzyNumber({{0, 3}, {2, 1}}), NotAFuzzyNumber);
  CHECK_THROWS_AS(AlphaGridFuzzyNumber({{0, 3}}), std::invalid_argument);
  // Within tolerance the violation is clamped away.
  const AlphaGridFuzzyNumber ok({{0, 3}, {-1e-14, 3 + 1e-14}}, 1e-12);
  CHECK(ok.cut(1) == Interval{0, 3});
}

TEST_CASE("addition") {
  CHECK(same_cuts(add(discretize(kA), discretize(kB)), discretize({1, 3, 7}), 1e-12));
  CHECK(same_cuts(add(discretize(kA), discretize({0, 0, 0})), discretize(kA), 0.0));
  CHECK(same_cuts(add(discretize(kMinus12), discretize({11, 12, 13})), discretize({-2, 0, 2}), 1e-12));
  CHECK(add(kA, kB) == TriangularFuzzyNumber{1, 3, 7});
  CHECK_THROWS_AS(add(discretize(kA, 4), discretize(kB, 8)), std::domain_error);
}

TEST_CASE("scalar multiplication") {
  CHECK(scalar_mul(1.0, discretize(kA)) == discretize(kA));
  CHECK(same_cuts(scalar_mul(-1.0, discretize(kA)), discretize({-3, -1, 0}), 0.0));
  CHECK(same_cuts(scalar_mul(0.0, discretize(kA)), discretize({0, 0, 0}), 0.0));
  CHECK(scalar_mul(-2.0, kA) == TriangularFuzzyNumber{-6, -2, 0});
}

TEST_CASE("gH difference") {
  SUBCASE("self difference is crisp zero") {
    const AlphaGridFuzzyNumber z = gh_difference(discretize(kA), discretize(kA));
    for (const Interval& c : z.cuts()) CHECK(c == Interval{0, 0});
  }
  SUBCASE("case (i) example") {
    const AlphaGridFuzzyNumber c = gh_difference(discretize({1, 3, 7}), discretize(kB));
    CHECK(same_cuts(c, discretize(kA), 1e-12));
    for (int k = 0; k <= c.intervals(); ++k) {
      const double alpha = c.alpha(k);
      CHECK(c.cut(k).lo == doctest::Approx(alpha));
      CHECK(c.cut(k).hi == doctest::Approx(3 - 2 * alpha));
    }
    CHECK(same_cuts(add(discretize(kB), c), discretize({1, 3, 7}), 1e-12));
  }
  SUBCASE("non-existence") {
    CHECK_THROWS_AS(gh_difference(discretize({0, 1, 1}), discretize({0, 0, 1})), NotAFuzzyNumber);
  }
  SUBCASE("case (ii): a narrower than b") {
    // (1,2,4) -gH (1,3,7): levelwise [2a-3, -a] flipped to [-(3-2a), -a]
    const AlphaGridFuzzyNumber c = gh_difference(discretize(kB), discretize({1, 3, 7}));
    CHECK(same_cuts(c, discretize({-3, -1, 0}), 1e-12));
  }
  CHECK_THROWS_AS(gh_difference(discretize(kA, 4), discretize(kA, 6)), std::domain_error);
}

TEST_CASE("distance") {
  CHECK(distance(discretize(kA), discretize(kA)) == 0.0);
  CHECK(distance(discretize(kA), discretize(kB)) == doctest::Approx(1.0));
  CHECK(distance(discretize(kA), discretize({0, 0, 0})) == doctest::Approx(3.0));
  CHECK_THROWS_AS(distance(discretize(kA, 4), discretize(kA, 8)), std::domain_error);
}

TEST_CASE("rank") {
  CHECK(rank(TriangularFuzzyNumber::crisp(4.5)).value == doctest::Approx(4.5));
  CHECK(rank(kA).value == doctest::Approx(7.0 / 6.0));
  CHECK(rank(kMinus12).value == doctest::Approx(-12.0));
  CHECK(rank(discretize(kA)).value == doctest::Approx(7.0 / 6.0).epsilon(1e-14));

  // Independent fine midpoint integration agrees with the closed form.
  CHECK(std::abs(rank_by_midpoint(kA) - 7.0 / 6.0) < 1e-9);
  CHECK(std::abs(rank_by_midpoint(kMinus12) + 12.0) < 1e-9);

  SUBCASE("odd grids close with the 3/8 rule") {
    for (int k : {3, 5, 7, 9}) CHECK(rank(discretize(kA, k)).value == doctest::Approx(7.0 / 6.0).epsilon(1e-13));
  }
}

TEST_CASE("compare") {
  CHECK(compare(kA, kA) == Ordering::Equivalent);
  CHECK(compare(kA, kB) == Ordering::Precedes);
  CHECK(compare(kB, kA) == Ordering::Succeeds);
  // Not comparable under the fuzzy-max order, comparable here.
  CHECK(compare(TriangularFuzzyNumber{0, 1, 4}, TriangularFuzzyNumber{0, 3, 4}) == Ordering::Precedes);
  CHECK(compare(discretize(kA), kB) == Ordering::Precedes);
  // Different shapes, equal rank.
  CHECK(compare(TriangularFuzzyNumber{0, 1, 2}, TriangularFuzzyNumber{-1, 1, 3}) == Ordering::Equivalent);
}

TEST_CASE("property: nestedness and triangular closure of arithmetic") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const TriangularFuzzyNumber a = random_triangular(rng), b = random_triangular(rng);
    const double lambda = uniform(rng, -5, 5);
    const AlphaGridFuzzyNumber sum = add(discretize(a), discretize(b));
    const AlphaGridFuzzyNumber scaled = scalar_mul(lambda, discretize(a));
    check_nested(sum);
    check_nested(scaled);
    CHECK(distance(sum, discretize(add(a, b))) <= 1e-12 * 64);
    CHECK(distance(scaled, discretize(scalar_mul(lambda, a))) <= 1e-12 * 64);

    // Endpoints stay linear in alpha.
    for (const AlphaGridFuzzyNumber* g : {&sum, &scaled}) {
      const Interval& bottom = g->cut(0);
      const Interval& top = g->cut(g->intervals());
      for (int k = 0; k <= g->intervals(); ++k) {
        const double t = g->alpha(k);
        CHECK(std::abs(g->cut(k).lo - ((1 - t) * bottom.lo + t * top.lo)) <= 1e-12 * (1 + std::abs(bottom.lo)) * 4);
        CHECK(std::abs(g->cut(k).hi - ((1 - t) * bottom.hi + t * top.hi)) <= 1e-12 * (1 + std::abs(bottom.hi)) * 4);
      }
    }
  }
}

TEST_CASE("property: gH self-inverse and reconstruction") {
  Rng rng(7);
  int successes = 0, failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const AlphaGridFuzzyNumber a = discretize(random_triangular(rng));
    const AlphaGridFuzzyNumber b = discretize(random_triangular(rng));
    for (const Interval& c : gh_difference(a, a).cuts()) CHECK(c == Interval{0, 0});
    try {
      const AlphaGridFuzzyNumber c = gh_difference(a, b);
      ++successes;
      check_nested(c);
      for (int k = 0; k <= c.intervals(); ++k) {
        const Interval &ak = a.cut(k), &bk = b.cut(k), &ck = c.cut(k);
        const bool case_i = std::abs(bk.lo + ck.lo - ak.lo) <= 1e-10 && std::abs(bk.hi + ck.hi - ak.hi) <= 1e-10;
        const bool case_ii = std::abs(ak.lo - ck.hi - bk.lo) <= 1e-10 && std::abs(ak.hi - ck.lo - bk.hi) <= 1e-10;
        CHECK((case_i || case_ii));
      }
    } catch (const NotAFuzzyNumber&) {
      ++failures;
    }
  }
  // Both outcomes occur for random triangulars.
  CHECK(successes > 0);
  CHECK(failures > 0);
}

TEST_CASE("property: rank is linear and matches quadrature") {
  Rng rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const TriangularFuzzyNumber a = random_triangular(rng), b = random_triangular(rng);
    const double lambda = uniform(rng, -10, 10);
    const AlphaGridFuzzyNumber ga = discretize(a), gb = discretize(b);
    CHECK(std::abs(rank(add(ga, gb)).value - (rank(ga).value + rank(gb).value)) <= 1e-10);
    CHECK(std::abs(rank(scalar_mul(lambda, ga)).value - lambda * rank(ga).value) <= 1e-10);
    CHECK(std::abs(rank(a).value - rank(discretize(a, 64)).value) <= 1e-10);
  }
}

TEST_CASE("property: compare is a total preorder") {
  Rng rng(5);
  auto le = [](const TriangularFuzzyNumber& x, const TriangularFuzzyNumber& y) {
    return compare(x, y) != Ordering::Succeeds;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const TriangularFuzzyNumber a = random_triangular(rng), b = random_triangular(rng), c = random_triangular(rng);
    CHECK(compare(a, a) == Ordering::Equivalent);
    CHECK((le(a, b) || le(b, a)));
    if (le(a, b) && le(b, c)) CHECK(le(a, c));
    // Antisymmetry of the verdicts.
    const Ordering ab = compare(a, b), ba = compare(b, a);
    CHECK((ab == Ordering::Precedes) == (ba == Ordering::Succeeds));
  }
}

TEST_CASE("property: distance is a metric") {
  Rng rng(314);
  for (int trial = 0; trial < 1000; ++trial) {
    const AlphaGridFuzzyNumber a = discretize(random_triangular(rng));
    const AlphaGridFuzzyNumber b = discretize(random_triangular(rng));
    const AlphaGridFuzzyNumber c = discretize(random_triangular(rng));
    CHECK(distance(a, a) == 0.0);
    CHECK(distance(a, b) >= 0.0);
    CHECK(std::abs(distance(a, b) - distance(b, a)) <= 1e-10);
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-10);
  }
}
