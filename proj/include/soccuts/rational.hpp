#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace soccuts {

// Arbitrary precision scalars. mpq_class keeps results of arithmetic in
// lowest terms with a positive denominator; every constructor path in this
// library goes through MakeRational or ParseRational so the invariant also
// holds for freshly built values.
using Integer = mpz_class;
using Rational = mpq_class;
using Vec = std::vector<Rational>;

Rational MakeRational(const Integer& num, const Integer& den);
Rational MakeRational(long num, long den = 1);

// Accepts "p", "p/q" and finite decimals such as "-0.125" or "2.5e-3".
Rational ParseRational(std::string_view text);
std::string ToString(const Rational& value);

Integer Floor(const Rational& value);
Integer Ceil(const Rational& value);
bool IsInteger(const Rational& value);
int Sign(const Rational& value);
int Sign(const Integer& value);

Vec MakeVec(std::initializer_list<Rational> values);
Vec ParseVec(std::initializer_list<std::string_view> values);
std::string ToString(std::span<const Rational> values);

Rational Dot(std::span<const Rational> lhs, std::span<const Rational> rhs);
Vec Add(std::span<const Rational> lhs, std::span<const Rational> rhs);
Vec Sub(std::span<const Rational> lhs, std::span<const Rational> rhs);
Vec Scale(const Rational& factor, std::span<const Rational> values);
Vec Negate(std::span<const Rational> values);
bool IsZero(std::span<const Rational> values);
bool IsIntegral(std::span<const Rational> values);

// Largest positive rational t such that values / t is an integer vector.
// For an integer vector this is the gcd of its entries. Requires a nonzero
// vector.
Rational PrimitiveScale(std::span<const Rational> values);

// values / PrimitiveScale(values): the primitive integer vector with the same
// direction.
Vec Primitive(std::span<const Rational> values);

// Row-major dense rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Builds from a list of rows; all rows must have equal length.
  static Matrix FromRows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec Row(std::size_t r) const;
  Vec Column(std::size_t c) const;
  std::vector<Vec> Rows() const;

  Vec Apply(std::span<const Rational> x) const;           // A x
  Vec ApplyTransposed(std::span<const Rational> y) const;  // A^T y

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace soccuts
