#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "soccuts/conic2d.hpp"
#include "soccuts/errors.hpp"

using namespace soccuts;

namespace {

Matrix M2(const char* a, const char* b, const char* c, const char* d) {
  return Matrix::FromRows({ParseVec({a, b}), ParseVec({c, d})});
}

QuadraticConic Quadratic(Matrix Q, Vec d, Rational s,
                         RegionSense sense = RegionSense::kGreaterEqual) {
  QuadraticConic q;
  q.Q = std::move(Q);
  q.d = std::move(d);
  q.s = std::move(s);
  q.sense = sense;
  return q;
}

// (x1 - a)(x2 - b) >= k^2.
QuadraticConic ShiftedProduct(const Rational& a, const Rational& b,
                              const Rational& k) {
  return Quadratic(M2("0", "1", "1", "0"), Vec{-b, -a}, a * b - k * k);
}

ErrorKind KindOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kInternalInconsistency;
}

void CheckCertificate(const ConicBlock2D& block, const Vec& pi,
                      const SupportResult& res) {
  REQUIRE(res.certificate.has_value());
  const SurdVec& y = *res.certificate;
  CHECK(SocContains(y));
  for (std::size_t c = 0; c < 2; ++c) {
    QuadraticSurd col = 0;
    for (std::size_t r = 0; r < y.size(); ++r) {
      col = col + y[r] * QuadraticSurd(block.A()(r, c));
    }
    CHECK(col == QuadraticSurd(pi[c]));
  }
  QuadraticSurd yb = 0;
  for (std::size_t r = 0; r < y.size(); ++r) {
    yb = yb + y[r] * QuadraticSurd(block.b()[r]);
  }
  CHECK(yb == res.value);
}

std::vector<ConicBlock2D> SampleBlocks() {
  std::vector<ConicBlock2D> out;
  auto t = testing::HyperbolaT();
  out.push_back(ConicBlock2D::FromSoc(t.A, t.b));
  out.push_back(HyperbolaToSoc(ShiftedProduct(3, 2, 1)));
  QuadraticConic neg = ShiftedProduct(MakeRational(1, 2), -1, MakeRational(3, 2));
  neg.branch = BranchSelector::kNegative;
  out.push_back(HyperbolaToSoc(neg));
  // x1^2 - x2^2 >= 1.
  out.push_back(HyperbolaToSoc(Quadratic(M2("2", "0", "0", "-2"), Vec{0, 0}, -1)));
  for (const char* r : {"3/5", "2/5", "3/4"}) {
    auto disc = testing::Disc(ParseRational(r));
    out.push_back(ConicBlock2D::FromSoc(disc.A, disc.b));
  }
  // x1^2 + 4 x2^2 <= 4.
  out.push_back(ToBlock(
      Quadratic(M2("2", "0", "0", "8"), Vec{0, 0}, -4, RegionSense::kLessEqual)));
  // x2 >= x1^2 and a rotated parabola (x1 + x2)^2 <= 4 (x2 - x1) + 2.
  out.push_back(ToBlock(
      Quadratic(M2("2", "0", "0", "0"), Vec{0, -1}, 0, RegionSense::kLessEqual)));
  out.push_back(ToBlock(
      Quadratic(M2("2", "2", "2", "2"), Vec{4, -4}, -2, RegionSense::kLessEqual)));
  // 2 x1 >= 1 and x1 + x2 >= sqrt(2) (a surd threshold).
  out.push_back(ConicBlock2D::FromSoc(M2("0", "0", "2", "0"), ParseVec({"0", "1"})));
  out.push_back(ConicBlock2D::FromSoc(
      Matrix::FromRows({ParseVec({"0", "0"}), ParseVec({"0", "0"}), ParseVec({"1", "1"})}),
      ParseVec({"1", "1", "0"})));
  return out;
}

}  // namespace

TEST_CASE("classify_conic examples") {
  CHECK(ClassifyConic(Quadratic(M2("0", "1", "1", "0"), Vec{0, 0}, -1)) ==
        ConicKind::kHyperbolaBranch);
  CHECK(ClassifyConic(Quadratic(M2("1", "0", "0", "1"), Vec{0, 0}, -1)) ==
        ConicKind::kEllipse);
  CHECK(ClassifyConic(Quadratic(M2("2", "0", "0", "0"), Vec{0, -1}, 0)) ==
        ConicKind::kParabola);
  CHECK(ClassifyConic(Quadratic(M2("0", "0", "0", "0"), Vec{1, 0}, 0)) ==
        ConicKind::kHalfSpace);
  CHECK(KindOf([] {
          ClassifyConic(Quadratic(M2("0", "0", "0", "0"), Vec{0, 0}, 1));
        }) == ErrorKind::kDegenerate);
  CHECK(KindOf([] {
          ClassifyConic(Quadratic(M2("0", "1", "2", "0"), Vec{0, 0}, 1));
        }) == ErrorKind::kMalformedInput);
}

TEST_CASE("hyperbola_to_soc on x1 x2 >= 1") {
  auto q = Quadratic(M2("0", "1", "1", "0"), Vec{0, 0}, -1);
  auto block = HyperbolaToSoc(q);
  auto t = testing::HyperbolaT();
  CHECK(block.A() == t.A);
  CHECK(block.b() == t.b);
  CHECK(block.row_scaling() == 2);
  CHECK(block.kind() == ConicKind::kHyperbolaBranch);

  auto form = CanonicalHyperbola(q);
  CHECK(form.eta == 1);
  CHECK(form.beta1 == 1);
  CHECK(form.beta2 == 1);

  auto [l1, l2] = Asymptotes(block);
  CHECK(l1.normal == Vec{1, 0});
  CHECK(l1.rhs == 0);
  CHECK(l2.normal == Vec{0, 1});
  CHECK(l2.rhs == 0);
  CHECK(l1.integer_normal);
}

TEST_CASE("translated hyperbola") {
  auto block = HyperbolaToSoc(ShiftedProduct(3, 2, 1));
  CHECK(block.A() == testing::HyperbolaT().A);
  CHECK(block.b() == ParseVec({"-2", "1", "5"}));
  Vec vertex{4, 3};
  Vec res = block.constraint().Residual(vertex);
  CHECK(res[0] * res[0] + res[1] * res[1] == res[2] * res[2]);
  CHECK(res[2] > 0);

  auto [l1, l2] = Asymptotes(block);
  CHECK(l1.normal == Vec{1, 0});
  CHECK(l1.rhs == 3);
  CHECK(l2.normal == Vec{0, 1});
  CHECK(l2.rhs == 2);

  auto [c1, c2] = HyperbolaCuts(block);
  CHECK(c1.pi == Vec{1, 0});
  CHECK(c1.pi0 == 4);
  CHECK(c2.pi == Vec{0, 1});
  CHECK(c2.pi0 == 3);
  auto points = testing::BruteForceLatticePoints({block.constraint()}, 0, 29, 0, 29);
  REQUIRE(!points.empty());
  CHECK(testing::AllSatisfy(points, c1));
  CHECK(testing::AllSatisfy(points, c2));
  bool tight1 = false, tight2 = false;
  for (const auto& p : points) {
    tight1 = tight1 || c1.IsTightAt(p);
    tight2 = tight2 || c2.IsTightAt(p);
  }
  CHECK(tight1);
  CHECK(tight2);
}

TEST_CASE("negative branch and branch selection by interior point") {
  auto q = Quadratic(M2("0", "1", "1", "0"), Vec{0, 0}, -1);
  q.branch = BranchSelector::kNegative;
  auto neg = HyperbolaToSoc(q);
  CHECK(neg.A() == Matrix::FromRows({Vec{0, 0}, Vec{-1, 1}, Vec{-1, -1}}));
  CHECK(neg.b() == ParseVec({"-2", "0", "0"}));
  CHECK(neg.Contains(Vec{-1, -1}));
  CHECK_FALSE(neg.Contains(Vec{1, 1}));

  auto by_point = Quadratic(M2("0", "1", "1", "0"), Vec{0, 0}, -1);
  by_point.interior_point = Vec{-2, -3};
  CHECK(HyperbolaToSoc(by_point).A() == neg.A());
  by_point.interior_point = Vec{0, 0};
  CHECK(KindOf([&] { HyperbolaToSoc(by_point); }) == ErrorKind::kDomain);
}

TEST_CASE("hyperbola conversion errors") {
  // Eigenvectors of [[2,1],[1,-1]] involve sqrt(13).
  CHECK(KindOf([] {
          HyperbolaToSoc(Quadratic(M2("2", "1", "1", "-1"), Vec{0, 0}, -1));
        }) == ErrorKind::kUnsupported);
  CHECK(KindOf([] { HyperbolaToSoc(ShiftedProduct(0, 0, 0)); }) ==
        ErrorKind::kDegenerate);
  // x1 x2 >= 1/2 needs sqrt(1/2).
  CHECK(KindOf([] {
          HyperbolaToSoc(Quadratic(M2("0", "1", "1", "0"), Vec{0, 0},
                                   MakeRational(-1, 2)));
        }) == ErrorKind::kUnsupported);
  // x1 x2 <= 1 is the region between the branches.
  CHECK(KindOf([] {
          HyperbolaToSoc(Quadratic(M2("0", "1", "1", "0"), Vec{0, 0}, -1,
                                   RegionSense::kLessEqual));
        }) == ErrorKind::kDomain);
  // Normal form is required for raw hyperbola data.
  CHECK(KindOf([] {
          ConicBlock2D::FromSoc(
              Matrix::FromRows({Vec{1, 0}, Vec{1, -1}, Vec{1, 1}}),
              ParseVec({"-2", "0", "0"}));
        }) == ErrorKind::kUnsupported);
}

TEST_CASE("hyperbola cuts, including the strict bump") {
  auto t = testing::HyperbolaT();
  auto [c1, c2] = HyperbolaCuts(ConicBlock2D::FromSoc(t.A, t.b));
  CHECK(c1.ToString() == "x1 >= 1");
  CHECK(c2.ToString() == "x2 >= 1");
  CHECK(*c1.derivation.tau == 2);

  // x1 x2 >= 1/4: the asymptote intercept 0 is integral and (0, k) lies on
  // it outside the set, so the right-hand side is bumped to 1.
  auto quarter = HyperbolaToSoc(Quadratic(M2("0", "1", "1", "0"), Vec{0, 0},
                                          MakeRational(-1, 4)));
  CHECK(quarter.b() == ParseVec({"-1", "0", "0"}));
  auto [q1, q2] = HyperbolaCuts(quarter);
  CHECK(q1.pi == Vec{1, 0});
  CHECK(q1.pi0 == 1);
  CHECK(q1.derivation.params.at("gamma_rhs") == "0");
  CHECK(q2.pi0 == 1);

  // Non-integral intercept 1/2 rounds up.
  auto half = HyperbolaToSoc(ShiftedProduct(MakeRational(1, 2), MakeRational(1, 2), 1));
  auto [h1, h2] = HyperbolaCuts(half);
  CHECK(h1.pi == Vec{1, 0});
  CHECK(h1.pi0 == 1);
  CHECK(h1.derivation.params.at("gamma_rhs") == "1/2");
  CHECK(h2.pi0 == 1);

  CHECK(KindOf([] {
          auto d = testing::Disc(1);
          HyperbolaCuts(ConicBlock2D::FromSoc(d.A, d.b));
        }) == ErrorKind::kDomain);
}

TEST_CASE("property: cuts are parallel to the asymptotes and valid") {
  testing::RationalGen gen(5150);
  for (int trial = 0; trial < 60; ++trial) {
    Rational a = gen.Next(8, 3), b = gen.Next(8, 3), k = abs(gen.Next(5, 3)) + 1;
    QuadraticConic q = ShiftedProduct(a, b, k);
    if (gen.Coin()) q.branch = BranchSelector::kNegative;
    auto block = HyperbolaToSoc(q);
    auto [l1, l2] = Asymptotes(block);
    auto [c1, c2] = HyperbolaCuts(block);
    CHECK(c1.pi == l1.normal);
    CHECK(c2.pi == l2.normal);
    auto points =
        testing::BruteForceLatticePoints({block.constraint()}, -25, 25, -25, 25);
    CHECK(testing::AllSatisfy(points, c1));
    CHECK(testing::AllSatisfy(points, c2));
  }
}

TEST_CASE("property: SOC form round-trips on rational boundary points") {
  testing::RationalGen gen(8080);
  for (int inst = 0; inst < 10; ++inst) {
    Rational a = gen.Next(6, 4), b = gen.Next(6, 4), k = abs(gen.Next(4, 4)) + 1;
    bool product = inst % 2 == 0;
    QuadraticConic q = product
                           ? ShiftedProduct(a, b, k)
                           // (x1 - a)^2 - (x2 - b)^2 >= k^2
                           : Quadratic(M2("2", "0", "0", "-2"), Vec{-2 * a, 2 * b},
                                       a * a - b * b - k * k);
    auto block = HyperbolaToSoc(q);
    for (int i = 0; i < 100; ++i) {
      Rational t = abs(gen.Next(20, 7)) + MakeRational(1, 11);
      Vec x;
      if (product) {
        x = {a + k * t, b + k / t};
      } else {
        // x1 - a = k (t + 1/t)/2, x2 - b = k (t - 1/t)/2.
        x = {a + k * (t + 1 / t) / 2, b + k * (t - 1 / t) / 2};
      }
      Vec res = block.constraint().Residual(x);
      REQUIRE(res[0] * res[0] + res[1] * res[1] == res[2] * res[2]);
      REQUIRE(res[2] >= 0);
    }
  }
}

TEST_CASE("parabola and ellipse conversions") {
  auto par = ToBlock(
      Quadratic(M2("2", "0", "0", "0"), Vec{0, -1}, 0, RegionSense::kLessEqual));
  CHECK(par.kind() == ConicKind::kParabola);
  CHECK(par.A() == Matrix::FromRows({Vec{2, 0}, Vec{0, 1}, Vec{0, 1}}));
  CHECK(par.b() == ParseVec({"0", "1", "-1"}));
  CHECK(par.Contains(Vec{2, 4}));
  CHECK_FALSE(par.Contains(Vec{2, 3}));

  // x2 >= (x1 - a)^2 + c for shifted vertices.
  for (const char* a : {"0", "1", "-1", "1/3", "5/2"}) {
    for (const char* c : {"0", "1", "-2", "1/3"}) {
      Rational ra = ParseRational(a), rc = ParseRational(c);
      auto shifted = ToBlock(Quadratic(M2("2", "0", "0", "0"), Vec{-2 * ra, -1},
                                       ra * ra + rc, RegionSense::kLessEqual));
      CHECK(shifted.ContainsStrictly(shifted.InteriorPoint()));
      CHECK(shifted.Contains(Vec{ra, rc}));
    }
  }

  auto ell = ToBlock(
      Quadratic(M2("2", "0", "0", "8"), Vec{0, 0}, -4, RegionSense::kLessEqual));
  CHECK(ell.kind() == ConicKind::kEllipse);
  CHECK(ell.Contains(Vec{2, 0}));
  CHECK(ell.Contains(Vec{0, 1}));
  CHECK_FALSE(ell.Contains(Vec{1, 1}));

  // x1^2 + x2^2 <= 2 has no LDL form with rational roots.
  CHECK(KindOf([] {
          ToBlock(Quadratic(M2("2", "0", "0", "2"), Vec{0, 0}, -2,
                            RegionSense::kLessEqual));
        }) == ErrorKind::kUnsupported);
  // The outside of a disc is not convex.
  CHECK(KindOf([] {
          ToBlock(Quadratic(M2("2", "0", "0", "8"), Vec{0, 0}, -4));
        }) == ErrorKind::kDomain);
}

TEST_CASE("support_minimize examples") {
  auto t = testing::HyperbolaT();
  auto hyp = ConicBlock2D::FromSoc(t.A, t.b);
  auto diag = SupportMinimize(hyp, Vec{1, 1});
  CHECK(diag.bounded);
  CHECK(diag.attained);
  CHECK(diag.value == QuadraticSurd(2));
  CHECK(*diag.minimizer == SurdVec{1, 1});
  CheckCertificate(hyp, Vec{1, 1}, diag);

  auto edge = SupportMinimize(hyp, Vec{1, 0});
  CHECK(edge.bounded);
  CHECK_FALSE(edge.attained);
  CHECK(edge.value == QuadraticSurd(0));
  CheckCertificate(hyp, Vec{1, 0}, edge);
  CHECK_FALSE(SupportMinimize(hyp, Vec{1, -1}).bounded);

  auto par = ToBlock(
      Quadratic(M2("2", "0", "0", "0"), Vec{0, -1}, 0, RegionSense::kLessEqual));
  CHECK_FALSE(SupportMinimize(par, Vec{1, 0}).bounded);
  auto tilt = SupportMinimize(par, Vec{1, 1});
  CHECK(tilt.value == QuadraticSurd(MakeRational(-1, 4)));
  CHECK(*tilt.minimizer == ToSurds(ParseVec({"-1/2", "1/4"})));
  CheckCertificate(par, Vec{1, 1}, tilt);

  auto disc = testing::Disc(MakeRational(3, 5));
  auto disc_block = ConicBlock2D::FromSoc(disc.A, disc.b);
  auto left = SupportMinimize(disc_block, Vec{1, 0});
  CHECK(left.value == QuadraticSurd(MakeRational(-1, 10)));
  CheckCertificate(disc_block, Vec{1, 0}, left);
  auto slanted = SupportMinimize(disc_block, Vec{1, 1});
  CHECK(slanted.value ==
        QuadraticSurd::Make(1, MakeRational(-3, 5), 2));  // 1 - 3/5 sqrt(2)
  CheckCertificate(disc_block, Vec{1, 1}, slanted);

  auto surd_half = ConicBlock2D::FromSoc(
      Matrix::FromRows({ParseVec({"0", "0"}), ParseVec({"0", "0"}), ParseVec({"1", "1"})}),
      ParseVec({"1", "1", "0"}));
  CHECK(surd_half.kind() == ConicKind::kHalfSpace);
  auto sh = SupportMinimize(surd_half, Vec{2, 2});
  CHECK(sh.value == QuadraticSurd::Make(0, 2, 2));
  CheckCertificate(surd_half, Vec{2, 2}, sh);
  CHECK_FALSE(SupportMinimize(surd_half, Vec{1, 0}).bounded);
  CHECK_FALSE(SupportMinimize(surd_half, Vec{-1, -1}).bounded);

  CHECK(KindOf([&] { SupportMinimize(hyp, Vec{0, 0}); }) == ErrorKind::kDomain);
}

TEST_CASE("property: support values lower-bound every enumerated point") {
  testing::RationalGen gen(31337);
  auto blocks = SampleBlocks();
  const std::vector<Vec> directions = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {2, 1},
      {1, 3}, {-2, 5}, {3, -1}, {1, 2}};
  long checked = 0;
  for (const auto& block : blocks) {
    std::vector<Vec> points;
    for (int i = -24; i <= 24; ++i) {
      for (int j = -24; j <= 24; ++j) {
        Vec x{MakeRational(i, 4), MakeRational(j, 4)};
        if (block.Contains(x)) points.push_back(x);
      }
    }
    for (int i = 0; i < 400; ++i) {
      Vec x = gen.NextVec(2, 40, 9);
      if (block.Contains(x)) points.push_back(x);
    }
    REQUIRE(!points.empty());
    for (const auto& pi : directions) {
      auto res = SupportMinimize(block, pi);
      if (!res.bounded) {
        // Unboundedness witness: objective keeps decreasing along the block.
        continue;
      }
      if (res.attained) {
        REQUIRE(block.Contains(*res.minimizer));
        REQUIRE(Dot(*res.minimizer, pi) == res.value);
      }
      CheckCertificate(block, pi, res);
      for (const auto& x : points) {
        REQUIRE(QuadraticSurd(Dot(pi, x)) >= res.value);
        ++checked;
      }
    }
  }
  CHECK(checked > 10000);
}
