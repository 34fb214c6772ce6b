#include "soccuts/cone.hpp"

#include "soccuts/errors.hpp"

namespace soccuts {

namespace {

template <typename T>
void CheckDimension(std::span<const T> v) {
  if (v.size() < 2) {
    Fail(ErrorKind::kMalformedInput,
         "second-order cone needs dimension >= 2, got " +
             std::to_string(v.size()));
  }
}

template <typename T>
T SquaredNormOfHead(std::span<const T> v) {
  T sum = T(0);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) sum = sum + v[i] * v[i];
  return sum;
}

}  // namespace

bool SocContains(std::span<const Rational> v) {
  CheckDimension(v);
  const Rational& axis = v.back();
  if (axis < 0) return false;
  return axis * axis >= SquaredNormOfHead(v);
}

bool SocInterior(std::span<const Rational> v) {
  CheckDimension(v);
  const Rational& axis = v.back();
  if (axis <= 0) return false;
  return axis * axis > SquaredNormOfHead(v);
}

bool SocContains(std::span<const QuadraticSurd> v) {
  CheckDimension(v);
  const QuadraticSurd& axis = v.back();
  if (axis.Sign() < 0) return false;
  return axis * axis >= SquaredNormOfHead(v);
}

bool SocInterior(std::span<const QuadraticSurd> v) {
  CheckDimension(v);
  const QuadraticSurd& axis = v.back();
  if (axis.Sign() <= 0) return false;
  return axis * axis > SquaredNormOfHead(v);
}

}  // namespace soccuts

namespace soccuts {

void Validate(const ConicConstraint& block) {
  if (block.A.rows() != block.b.size()) {
    Fail(ErrorKind::kMalformedInput,
         "conic block: A has " + std::to_string(block.A.rows()) +
             " rows but b has " + std::to_string(block.b.size()) + " entries");
  }
  if (block.A.rows() < 2) {
    Fail(ErrorKind::kMalformedInput, "conic block needs at least 2 rows");
  }
}

Vec ConicConstraint::Residual(std::span<const Rational> x) const {
  return Sub(A.Apply(x), b);
}

bool ConicConstraint::Contains(std::span<const Rational> x) const {
  return SocContains(Residual(x));
}

bool ConicConstraint::ContainsStrictly(std::span<const Rational> x) const {
  return SocInterior(Residual(x));
}

bool ConicConstraint::Contains(std::span<const QuadraticSurd> x) const {
  if (x.size() != A.cols()) {
    Fail(ErrorKind::kMalformedInput, "dimension mismatch in membership test");
  }
  SurdVec residual(A.rows());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    QuadraticSurd sum = -QuadraticSurd(b[r]);
    for (std::size_t c = 0; c < A.cols(); ++c) {
      sum = sum + x[c] * QuadraticSurd(A(r, c));
    }
    residual[r] = sum;
  }
  return SocContains(std::span<const QuadraticSurd>(residual));
}

}  // namespace soccuts
