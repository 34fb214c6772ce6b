#include "soccuts/surd.hpp"

#include <cmath>
#include <sstream>

#include "soccuts/errors.hpp"

namespace soccuts {

namespace {

Integer ISqrt(const Integer& n) {
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

bool IsPerfectSquare(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Sign of a + b*sqrt(r), r square-free (or zero).
int SignOfSingle(const Rational& a, const Rational& b, const Integer& r) {
  int sb = (r == 0) ? 0 : sgn(b);
  int sa = sgn(a);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Rational lhs = a * a;
  Rational rhs = b * b * Rational(r);
  int order = cmp(lhs, rhs);
  if (order > 0) return sa;
  if (order < 0) return sb;
  return 0;
}

}  // namespace

std::pair<Integer, Integer> SquareFreeDecomposition(const Integer& n) {
  if (n <= 0) Fail(ErrorKind::kDomain, "square-free part of non-positive");
  Integer rest = n;
  Integer outside = 1;
  // Trial division by small factors; a large leftover cofactor is accepted as
  // square-free unless it is itself a perfect square.
  constexpr unsigned long kTrialLimit = 100000;
  for (unsigned long d = 2; d <= kTrialLimit; ++d) {
    Integer dd = Integer(d) * d;
    if (dd > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d * d) != 0) {
      rest /= dd;
      outside *= d;
    }
  }
  if (rest > 1 && IsPerfectSquare(rest)) {
    outside *= ISqrt(rest);
    rest = 1;
  }
  return {outside, rest};
}

int SignOfSurdSum(const Rational& a, const Rational& b, const Integer& r,
                  const Rational& c, const Integer& s) {
  if (r == s) return SignOfSingle(a, b + c, r);
  if (r == 0 || b == 0) return SignOfSingle(a, c, s);
  if (s == 0 || c == 0) return SignOfSingle(a, b, r);

  // u = b*sqrt(r) + c*sqrt(s)
  int sign_b = sgn(b);
  int sign_c = sgn(c);
  int sign_u;
  if (sign_b == sign_c) {
    sign_u = sign_b;
  } else {
    int order = cmp(b * b * Rational(r), c * c * Rational(s));
    sign_u = order > 0 ? sign_b : (order < 0 ? sign_c : 0);
  }
  int sign_a = sgn(a);
  if (sign_u == 0) return sign_a;
  if (sign_a == 0 || sign_a == sign_u) return sign_u;

  // Opposite signs: compare a^2 with u^2 = b^2 r + c^2 s + 2bc sqrt(rs).
  auto [k, m] = SquareFreeDecomposition(r * s);
  Rational rest = a * a - b * b * Rational(r) - c * c * Rational(s);
  Rational coeff = -2 * b * c * Rational(k);
  int diff = (m == 1) ? sgn(rest + coeff) : SignOfSingle(rest, coeff, m);
  if (diff > 0) return sign_a;
  if (diff < 0) return sign_u;
  return 0;
}

QuadraticSurd QuadraticSurd::Make(const Rational& p, const Rational& q,
                                  const Integer& r) {
  if (r < 0) Fail(ErrorKind::kDomain, "negative radicand");
  if (q == 0 || r == 0) return QuadraticSurd(p);
  auto [outside, inside] = SquareFreeDecomposition(r);
  Rational scaled_q = q * Rational(outside);
  if (inside == 1) return QuadraticSurd(p + scaled_q);
  return QuadraticSurd(p, scaled_q, inside);
}

QuadraticSurd QuadraticSurd::Sqrt(const Rational& x) {
  if (x < 0) Fail(ErrorKind::kDomain, "square root of a negative rational");
  // sqrt(a/b) = sqrt(a*b) / b
  Integer ab = x.get_num() * x.get_den();
  return Make(0, Rational(1) / Rational(x.get_den()), ab);
}

const Rational& QuadraticSurd::AsRational() const {
  if (!IsRational()) {
    Fail(ErrorKind::kDomain, "surd " + ToString() + " is irrational");
  }
  return p_;
}

int QuadraticSurd::Sign() const { return SignOfSingle(p_, q_, r_); }

Integer QuadraticSurd::Floor() const {
  if (IsRational()) return soccuts::Floor(p_);
  // q sqrt(r) lies strictly between consecutive integers around s.
  Integer s = ISqrt(soccuts::Floor(q_ * q_ * Rational(r_)));
  Rational lo = q_ > 0 ? Rational(s) : Rational(-s - 1);
  Integer candidate = soccuts::Floor(p_ + lo);
  // Now candidate <= value < candidate + 2; one exact check settles it.
  if (*this >= QuadraticSurd(Rational(candidate + 1))) return candidate + 1;
  return candidate;
}

Integer QuadraticSurd::Ceil() const {
  if (IsRational()) return soccuts::Ceil(p_);
  // Irrational values are never integers.
  return Floor() + 1;
}

Rational QuadraticSurd::LowerBound(unsigned bits) const {
  if (IsRational()) return p_;
  Integer scale = Integer(1) << bits;
  QuadraticSurd scaled = *this * QuadraticSurd(Rational(scale));
  return Rational(scaled.Floor(), scale);
}

Rational QuadraticSurd::UpperBound(unsigned bits) const {
  return -(-*this).LowerBound(bits);
}

double QuadraticSurd::ToDouble() const {
  return p_.get_d() + q_.get_d() * std::sqrt(r_.get_d());
}

std::string QuadraticSurd::ToString() const {
  if (IsRational()) return p_.get_str();
  std::ostringstream os;
  os << p_.get_str() << " + " << q_.get_str() << "*sqrt(" << r_.get_str()
     << ")";
  return os.str();
}

QuadraticSurd QuadraticSurd::Parse(std::string_view text) {
  auto plus = text.find(" + ");
  if (plus == std::string_view::npos) return QuadraticSurd(ParseRational(text));
  std::string_view head = text.substr(0, plus);
  std::string_view tail = text.substr(plus + 3);
  auto star = tail.find("*sqrt(");
  if (star == std::string_view::npos || tail.back() != ')') {
    Fail(ErrorKind::kMalformedInput,
         "not a surd literal: '" + std::string(text) + "'");
  }
  Rational p = ParseRational(head);
  Rational q = ParseRational(tail.substr(0, star));
  Rational r = ParseRational(tail.substr(star + 6, tail.size() - star - 7));
  if (!IsInteger(r)) Fail(ErrorKind::kMalformedInput, "non-integer radicand");
  return Make(p, q, r.get_num());
}

QuadraticSurd QuadraticSurd::operator-() const {
  return QuadraticSurd(-p_, -q_, r_);
}

namespace {

const Integer& CommonRadicand(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (a.IsRational()) return b.radicand();
  if (b.IsRational() || a.radicand() == b.radicand()) return a.radicand();
  Fail(ErrorKind::kUnsupported,
       "arithmetic on surds with different radicands: " + a.ToString() +
           " and " + b.ToString());
}

}  // namespace

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
  const Integer& r = CommonRadicand(a, b);
  return QuadraticSurd::Make(a.p_ + b.p_, a.q_ + b.q_, r);
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) {
  return a + (-b);
}

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  const Integer& r = CommonRadicand(a, b);
  Rational rr = (a.IsRational() || b.IsRational()) ? Rational(0) : Rational(r);
  return QuadraticSurd::Make(a.p_ * b.p_ + a.q_ * b.q_ * rr,
                             a.p_ * b.q_ + a.q_ * b.p_, r);
}

QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (b.Sign() == 0) Fail(ErrorKind::kDomain, "division by zero surd");
  if (b.IsRational()) {
    return QuadraticSurd::Make(a.p_ / b.p_, a.q_ / b.p_, a.r_);
  }
  // Multiply by the conjugate; the denominator p^2 - q^2 r is a nonzero
  // rational because r is square-free.
  QuadraticSurd conjugate = QuadraticSurd::Make(b.p_, -b.q_, b.r_);
  Rational norm = b.p_ * b.p_ - b.q_ * b.q_ * Rational(b.r_);
  QuadraticSurd num = a * conjugate;
  return QuadraticSurd::Make(num.p_ / norm, num.q_ / norm, num.r_);
}

std::strong_ordering operator<=>(const QuadraticSurd& a,
                                 const QuadraticSurd& b) {
  int s = SignOfSurdSum(a.p_ - b.p_, a.q_, a.r_, -b.q_, b.r_);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

SurdVec ToSurds(std::span<const Rational> values) {
  return SurdVec(values.begin(), values.end());
}

QuadraticSurd Dot(std::span<const QuadraticSurd> lhs,
                  std::span<const Rational> rhs) {
  if (lhs.size() != rhs.size()) {
    Fail(ErrorKind::kMalformedInput, "dimension mismatch in dot product");
  }
  QuadraticSurd sum;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    sum = sum + lhs[i] * QuadraticSurd(rhs[i]);
  }
  return sum;
}

}  // namespace soccuts
