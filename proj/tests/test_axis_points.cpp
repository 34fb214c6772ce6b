#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "axis_points.hpp"

using namespace soccuts;
using namespace soccuts::testing;

namespace {

ConicSet2D TPrime() {
  ConicConstraint c = HyperbolaT();
  return ConicSet2D({ConicBlock2D::FromSoc(c.A, c.b)});
}

std::vector<OuterPolyhedron> Harness() {
  std::vector<OuterPolyhedron> all = BoundedApproximations(TPrime());
  for (auto& p : RandomApproximations(300, 7)) all.push_back(p);
  return all;
}

}  // namespace

TEST_CASE("validity oracle for T'") {
  CHECK(ValidForTPrime(Tangent(MakeRational(1))));
  CHECK(ValidForTPrime(Tangent(MakeRational(7, 3))));
  CHECK(ValidForTPrime(NonNegative(0)));
  CHECK_FALSE(ValidForTPrime(CutInequality{Vec{1, 0}, Rational(1)}));
  CHECK_FALSE(ValidForTPrime(CutInequality{Vec{1, 1}, MakeRational(21, 10)}));
  CHECK_FALSE(ValidForTPrime(CutInequality{Vec{-1, 1}, Rational(-5)}));
  // Points on x1 x2 = 1 satisfy every tangent.
  for (long p = 1; p <= 12; ++p) {
    for (long q = 1; q <= 12; ++q) {
      Vec x{MakeRational(p, q), MakeRational(q, p)};
      CHECK(Tangent(MakeRational(3, 5)).IsSatisfiedBy(x));
      CHECK(Tangent(MakeRational(11, 2)).IsSatisfiedBy(x));
    }
  }
}

TEST_CASE("bounded outer approximations of T' keep their valid rows") {
  auto approx = BoundedApproximations(TPrime());
  REQUIRE(approx.size() >= 6);
  for (const auto& p : approx) {
    CAPTURE(p.origin);
    CHECK(!p.rows.empty());
    CHECK(p.rows.size() <= 8);
  }
}

TEST_CASE("every outer approximation of T' meets both axes") {
  const CutInequality axis_cuts[] = {CutInequality{Vec{1, 0}, Rational(1)},
                                 CutInequality{Vec{0, 1}, Rational(1)}};
  for (const auto& p : Harness()) {
    CAPTURE(p.origin);
    REQUIRE(p.rows.size() <= 8);
    for (const auto& c : p.rows) REQUIRE(ValidForTPrime(c));
    for (int axis = 0; axis < 2; ++axis) {
      Integer k = AxisThreshold(p.rows, axis);
      CHECK(k <= 1'000'000);
      Vec z = AxisPoint(axis, k);
      CHECK(Contains(p.rows, z));
      // Every larger point on the axis is inside too.
      CHECK(Contains(p.rows, AxisPoint(axis, k + 1000)));
      CHECK_FALSE(axis_cuts[1 - axis].IsSatisfiedBy(z));
    }
  }
}

TEST_CASE("thresholds are not loose by more than one step") {
  // With a single tangent at t, (0, k) is inside iff t^2 k >= 2t.
  for (long t = 1; t <= 20; ++t) {
    std::vector<CutInequality> rows{Tangent(MakeRational(t, 3))};
    Integer k = AxisThreshold(rows, 1);
    CHECK(Contains(rows, AxisPoint(1, k)));
    if (k > 0) CHECK_FALSE(Contains(rows, AxisPoint(1, k - 1)));
  }
}
