#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "soccuts/cone.hpp"
#include "soccuts/rational.hpp"

namespace soccuts {

// Where a parameter vector gamma sits relative to the admissible region
// Gamma_j u int(L^m) of the f_gamma family. Interior points of L^m are
// reported as kInteriorSoc even when they also lie in Gamma_j.
enum class GammaDomain { kInteriorSoc, kGammaJ, kInadmissible };

std::string_view ToString(GammaDomain domain);

// j is 1-based and must lie in [1, m-1].
GammaDomain ClassifyGamma(std::span<const Rational> gamma, int j);

// Human readable list of the Gamma_j conditions that gamma violates; empty
// when gamma is admissible.
std::vector<std::string> GammaViolations(std::span<const Rational> gamma,
                                         int j);

// f_gamma(v) = gamma^T v + 1   if v_j != 0 and gamma^T v is an integer,
//              ceil(gamma^T v)  otherwise.
// Subadditive, non-decreasing w.r.t. L^m and zero at the origin whenever
// gamma is admissible. Construction rejects inadmissible parameters.
class GammaFunction {
 public:
  GammaFunction(Vec gamma, int j);

  const Vec& gamma() const { return gamma_; }
  int j() const { return j_; }
  GammaDomain domain() const { return domain_; }
  std::size_t dimension() const { return gamma_.size(); }

  Rational operator()(std::span<const Rational> v) const;

 private:
  Vec gamma_;
  int j_;
  GammaDomain domain_;
};

// Evaluates f_gamma; throws a domain error for inadmissible parameters.
Rational EvalFGamma(std::span<const Rational> gamma, int j,
                    std::span<const Rational> v);

// v -> w^T v, or ceil(w^T v) when rounding; w must lie in L^m (the dual cone).
struct AggregationFunction {
  Vec weights;
  bool round = false;

  Rational operator()(std::span<const Rational> v) const;
};

using CutFunction = std::variant<GammaFunction, AggregationFunction>;

Rational Evaluate(const CutFunction& f, std::span<const Rational> v);

// Provenance attached to every emitted inequality, detailed enough to redo
// the computation that produced it.
struct Derivation {
  std::string generator;
  std::optional<Vec> gamma;
  std::optional<int> j;
  std::vector<Vec> weights;
  std::optional<Rational> tau;
  std::map<std::string, std::string> params;
};

// pi^T x >= pi0.
struct CutInequality {
  Vec pi;
  Rational pi0;
  Derivation derivation;

  Rational Activity(std::span<const Rational> x) const { return Dot(pi, x); }
  bool IsSatisfiedBy(std::span<const Rational> x) const {
    return Activity(x) >= pi0;
  }
  bool IsTightAt(std::span<const Rational> x) const {
    return Activity(x) == pi0;
  }
  // Same coefficients and right-hand side, ignoring the derivation.
  bool SameInequality(const CutInequality& other) const {
    return pi == other.pi && pi0 == other.pi0;
  }
  std::string ToString() const;
};

// Coefficients scaled to a primitive integer vector (right-hand side scaled
// by the same positive factor, not rounded).
CutInequality PrimitiveForm(const CutInequality& cut);

// Eq.-style recipe  sum_j f(A^j) x_j >= f(b), valid when every x_j is a
// non-negative integer.
CutInequality MakeCut(const CutFunction& f, const Matrix& A,
                      std::span<const Rational> b);

// The same recipe for free integer variables: splits x = x+ - x-, applies f
// to +A^j and -A^j and projects back. Requires f(A^j) = -f(-A^j) for every
// column, otherwise throws projection-invalid.
CutInequality SplitAndProjectCut(const GammaFunction& f, const Matrix& A,
                                 std::span<const Rational> b);

// Aggregates the blocks with dual weights y^i in L^{m_i}:
//   w = sum (y^i)^T A^i,  w0 = sum (y^i)^T b^i,   w^T x >= w0.
// With require_integer_normal the inequality is rescaled to the primitive
// integer normal pi = w / tau and rounded to pi^T x >= ceil(w0 / tau),
// which is valid for integer points.
CutInequality AggregationRoundCut(const std::vector<Vec>& weights,
                                  const std::vector<ConicConstraint>& blocks,
                                  bool require_integer_normal);

}  // namespace soccuts
