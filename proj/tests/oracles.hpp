#pragma once

// Test-only brute-force oracles. Nothing here calls into the hull or
// conic2d modules, so they can check those modules independently.

#include <vector>

#include "soccuts/cgf.hpp"
#include "soccuts/cone.hpp"

namespace soccuts::testing {

inline std::vector<Vec> BruteForceLatticePoints(
    const std::vector<ConicConstraint>& blocks, long lo1, long hi1, long lo2,
    long hi2) {
  std::vector<Vec> out;
  for (long a = lo1; a <= hi1; ++a) {
    for (long b = lo2; b <= hi2; ++b) {
      Vec x{Rational(a), Rational(b)};
      bool inside = true;
      for (const auto& block : blocks) {
        if (!block.Contains(x)) {
          inside = false;
          break;
        }
      }
      if (inside) out.push_back(x);
    }
  }
  return out;
}

inline bool AllSatisfy(const std::vector<Vec>& points, const CutInequality& cut) {
  for (const auto& p : points) {
    if (!cut.IsSatisfiedBy(p)) return false;
  }
  return true;
}

// The hyperbola x1 x2 >= 1, x >= 0 in second-order-cone form.
inline ConicConstraint HyperbolaT() {
  return {Matrix::FromRows({ParseVec({"0", "0"}), ParseVec({"1", "-1"}),
                            ParseVec({"1", "1"})}),
          ParseVec({"-2", "0", "0"})};
}

// Disc with centre (1/2, 1/2) and the given radius:  ||x - c|| <= r.
inline ConicConstraint Disc(const Rational& radius) {
  return {Matrix::FromRows({ParseVec({"1", "0"}), ParseVec({"0", "1"}),
                            ParseVec({"0", "0"})}),
          Vec{MakeRational(1, 2), MakeRational(1, 2), Rational(-radius)}};
}

}  // namespace soccuts::testing
