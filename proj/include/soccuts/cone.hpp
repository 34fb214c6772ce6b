#pragma once

#include <span>

#include "soccuts/rational.hpp"
#include "soccuts/surd.hpp"

namespace soccuts {

// Second-order cone L^m = { v : sqrt(v_1^2 + ... + v_{m-1}^2) <= v_m }.
// The last coordinate is the axis. All tests square both sides so no radical
// is ever evaluated. Dimension below 2 is malformed input.
bool SocContains(std::span<const Rational> v);
bool SocInterior(std::span<const Rational> v);

// Same tests for vectors whose entries share a single radicand (dual
// certificates of conic-section optima).
bool SocContains(std::span<const QuadraticSurd> v);
bool SocInterior(std::span<const QuadraticSurd> v);

}  // namespace soccuts

namespace soccuts {

// One conic block  A x  >=_{L^m}  b, i.e. A x - b in L^m.
struct ConicConstraint {
  Matrix A;
  Vec b;

  std::size_t dimension() const { return A.cols(); }
  std::size_t cone_dimension() const { return A.rows(); }

  // A x - b.
  Vec Residual(std::span<const Rational> x) const;
  bool Contains(std::span<const Rational> x) const;
  bool ContainsStrictly(std::span<const Rational> x) const;
  // Membership of points with surd coordinates sharing one radicand.
  bool Contains(std::span<const QuadraticSurd> x) const;

  bool operator==(const ConicConstraint&) const = default;
};

// Throws malformed-input if the shapes of A and b disagree or m < 2.
void Validate(const ConicConstraint& block);

}  // namespace soccuts
