#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "soccuts/cgf.hpp"
#include "soccuts/cone.hpp"
#include "soccuts/rational.hpp"
#include "soccuts/surd.hpp"

namespace soccuts {

enum class ConicKind { kHalfSpace, kEllipse, kParabola, kHyperbolaBranch };

std::string_view ToString(ConicKind kind);

enum class RegionSense { kGreaterEqual, kLessEqual };
enum class BranchSelector { kPositive, kNegative };

// { x in R^2 : 1/2 x^T Q x + d^T x + s  (>= or <=)  0 }.
// For hyperbolas the branch is picked by `branch`, or by the interior point
// when one is supplied.
struct QuadraticConic {
  Matrix Q;
  Vec d;
  Rational s;
  RegionSense sense = RegionSense::kGreaterEqual;
  BranchSelector branch = BranchSelector::kPositive;
  std::optional<Vec> interior_point;
};

// By the eigenvalue signs of Q (determinant and trace, exactly).
ConicKind ClassifyConic(const QuadraticConic& q);

// [beta1 (y1 - alpha1)]^2 - [beta2 (y2 - alpha2)]^2 = eta^2 with
// y_k = V_k^T x / |V_k|^2 for the integer eigenvector columns V_k of Q.
struct CanonicalHyperbolaForm {
  Matrix V;
  Rational beta1, beta2, alpha1, alpha2, eta;
};

// Throws unsupported when the eigenvectors or the square roots involved
// are irrational, degenerate when eta = 0.
CanonicalHyperbolaForm CanonicalHyperbola(const QuadraticConic& q);

// normal^T x = rhs. The normal points into the block.
struct Line2D {
  Vec normal;
  Rational rhs;
  bool integer_normal = true;
};

struct SupportResult;

// A x >=_{L^m} b with n = 2, classified by the shape of the quadratic
// ||R x - r||^2 - (a^T x - b_m)^2 where R holds the leading rows of A and a
// the last one. Hyperbola branches must be in the normal form
// A in Q^{3x2} with a zero first row.
class ConicBlock2D {
 public:
  static ConicBlock2D FromSoc(Matrix A, Vec b);

  const Matrix& A() const { return A_; }
  const Vec& b() const { return b_; }
  ConicKind kind() const { return kind_; }
  ConicConstraint constraint() const { return {A_, b_}; }
  // Positive factor applied to the rows while converting from a quadratic.
  const Rational& row_scaling() const { return row_scaling_; }

  bool Contains(std::span<const Rational> x) const;
  bool Contains(std::span<const QuadraticSurd> x) const;
  bool ContainsStrictly(std::span<const Rational> x) const;
  bool IsBounded() const { return kind_ == ConicKind::kEllipse; }

  // The recession cone is { v : n^T v >= 0 for every n in the list }.
  const std::vector<Vec>& RecessionNormals() const { return rec_normals_; }
  // A rational point with every constraint strict.
  const Vec& InteriorPoint() const { return interior_point_; }

  // Half-space data: a^T x >= threshold with a the last row of A.
  Vec halfspace_normal() const { return A_.Row(A_.rows() - 1); }
  QuadraticSurd halfspace_threshold() const;

  // phi(x) = x^T M x - 2 g^T x + k0 = ||R x - r||^2 - (a^T x - b_m)^2;
  // convex for ellipses and parabolas.
  const Matrix& M() const { return M_; }
  const Vec& g() const { return g_; }

 private:
  ConicBlock2D() = default;
  friend ConicBlock2D HyperbolaToSoc(const QuadraticConic& q);
  friend ConicBlock2D ToBlock(const QuadraticConic& q);
  friend SupportResult SupportMinimize(const ConicBlock2D& block,
                                       std::span<const Rational> pi);

  Matrix A_;
  Vec b_;
  ConicKind kind_ = ConicKind::kHalfSpace;
  Rational row_scaling_ = 1;
  std::vector<Vec> rec_normals_;
  Vec interior_point_;
  Matrix M_;
  Vec g_;
  Rational k0_;
  Vec center_;     // ellipse
  Rational qc_;    // ellipse: phi(center)
  Vec axis_;       // parabola: M = kappa n n^T, n primitive
  Vec direction_;  // parabola: recession ray d with g^T d > 0
  Rational kappa_;
};

// The selected branch as a 3-row SOC block built from the asymptote normals.
ConicBlock2D HyperbolaToSoc(const QuadraticConic& q);
// Any supported quadratic region in SOC form (half-space, ellipse when the
// required square roots are rational, parabola, hyperbola branch).
ConicBlock2D ToBlock(const QuadraticConic& q);

// Asymptote through t + s = 0 (first) and s - t = 0 (second), where
// t = A_2 x - b_2 and s = A_3 x - b_3.
std::pair<Line2D, Line2D> Asymptotes(const ConicBlock2D& block);

// The two cuts parallel to the asymptotes, produced by f_gamma with
// gamma = u / tau, u in {(0,1,1), (0,-1,1)} and j = 1, in primitive form.
std::pair<CutInequality, CutInequality> HyperbolaCuts(const ConicBlock2D& block);

struct SupportResult {
  bool bounded = false;
  QuadraticSurd value;
  bool attained = false;
  std::optional<SurdVec> minimizer;
  // y in L^m with A^T y = pi and y^T b = value.
  std::optional<SurdVec> certificate;
};

// inf { pi^T x : x in block }.
SupportResult SupportMinimize(const ConicBlock2D& block,
                              std::span<const Rational> pi);

}  // namespace soccuts
