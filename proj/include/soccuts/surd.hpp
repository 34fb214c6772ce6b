#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "soccuts/rational.hpp"

namespace soccuts {

// Exact real number p + q * sqrt(r) with r a square-free natural number.
// Canonical form: r == 0 iff q == 0, so two surds are equal iff their
// triples are equal. Optima of linear objectives over conic sections in the
// plane always have this form.
class QuadraticSurd {
 public:
  QuadraticSurd() : p_(0), q_(0), r_(0) {}
  QuadraticSurd(const Rational& value) : p_(value), q_(0), r_(0) {}  // NOLINT
  QuadraticSurd(long value) : p_(value), q_(0), r_(0) {}             // NOLINT

  static QuadraticSurd Make(const Rational& p, const Rational& q,
                            const Integer& r);
  // sqrt(x) for a non-negative rational x.
  static QuadraticSurd Sqrt(const Rational& x);
  // Inverse of ToString.
  static QuadraticSurd Parse(std::string_view text);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Integer& radicand() const { return r_; }
  bool IsRational() const { return q_ == 0; }
  // Requires IsRational().
  const Rational& AsRational() const;

  int Sign() const;
  Integer Ceil() const;
  Integer Floor() const;
  // Largest k/2^bits not exceeding the value; the value itself when rational.
  Rational LowerBound(unsigned bits = 40) const;
  Rational UpperBound(unsigned bits = 40) const;
  // Presentation only.
  double ToDouble() const;
  std::string ToString() const;

  QuadraticSurd operator-() const;
  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b);

  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_;
  }
  // Exact for any pair, including different radicands.
  friend std::strong_ordering operator<=>(const QuadraticSurd& a,
                                          const QuadraticSurd& b);

 private:
  QuadraticSurd(Rational p, Rational q, Integer r)
      : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {}

  Rational p_;
  Rational q_;
  Integer r_;
};

using SurdVec = std::vector<QuadraticSurd>;

// Sign of a + b*sqrt(r) + c*sqrt(s) for square-free r, s >= 0.
int SignOfSurdSum(const Rational& a, const Rational& b, const Integer& r,
                  const Rational& c, const Integer& s);

// Splits n > 0 into (k, m) with n = k^2 * m and m square-free.
std::pair<Integer, Integer> SquareFreeDecomposition(const Integer& n);

// Smallest integer >= x; ceil_surd in the operation catalogue.
inline Integer CeilSurd(const QuadraticSurd& x) { return x.Ceil(); }

SurdVec ToSurds(std::span<const Rational> values);
QuadraticSurd Dot(std::span<const QuadraticSurd> lhs,
                  std::span<const Rational> rhs);

}  // namespace soccuts
