#include "soccuts/rational.hpp"

#include <cctype>
#include <sstream>

#include "soccuts/errors.hpp"

namespace soccuts {

std::string_view ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedInput:
      return "malformed-input";
    case ErrorKind::kDomain:
      return "domain";
    case ErrorKind::kDegenerate:
      return "degenerate";
    case ErrorKind::kUnsupported:
      return "unsupported";
    case ErrorKind::kProjectionInvalid:
      return "projection-invalid";
    case ErrorKind::kDegenerateAggregation:
      return "degenerate-aggregation";
    case ErrorKind::kHypothesisViolation:
      return "hypothesis-violation";
    case ErrorKind::kNotSeparable:
      return "not-separable";
    case ErrorKind::kInvalidInequality:
      return "invalid-inequality";
    case ErrorKind::kNotAFace:
      return "not-a-face";
    case ErrorKind::kNotEmpty:
      return "not-empty";
    case ErrorKind::kInternalInconsistency:
      return "internal-inconsistency";
  }
  return "unknown";
}

Rational MakeRational(const Integer& num, const Integer& den) {
  if (den == 0) Fail(ErrorKind::kMalformedInput, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational MakeRational(long num, long den) {
  return MakeRational(Integer(num), Integer(den));
}

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer ParseInteger(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) {
    Fail(ErrorKind::kMalformedInput,
         "not an exact rational literal: '" + std::string(whole) + "'");
  }
  Integer value(std::string(s), 10);
  return negative ? Integer(-value) : value;
}

Integer PowerOfTen(unsigned long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) Fail(ErrorKind::kMalformedInput, "empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = ParseInteger(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
    Integer den = ParseInteger(den_text, text);
    return MakeRational(num, den);
  }

  // Decimal with optional exponent.
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Integer exp_value = ParseInteger(s.substr(e + 1), text);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 4096) {
      Fail(ErrorKind::kMalformedInput, "exponent out of range in '" +
                                           std::string(text) + "'");
    }
    exponent = exp_value.get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !AllDigits(int_part)) ||
        (!frac_part.empty() && !AllDigits(frac_part))) {
      Fail(ErrorKind::kMalformedInput,
           "not an exact rational literal: '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!AllDigits(s)) {
      Fail(ErrorKind::kMalformedInput,
           "not an exact rational literal: '" + std::string(text) + "'");
    }
    digits = std::string(s);
  }
  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long shift = exponent - fraction_digits;
  if (shift >= 0) {
    return Rational(Integer(mantissa * PowerOfTen(shift)));
  }
  return MakeRational(mantissa, PowerOfTen(static_cast<unsigned long>(-shift)));
}

std::string ToString(const Rational& value) { return value.get_str(); }

Integer Floor(const Rational& value) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

Integer Ceil(const Rational& value) {
  Integer result;
  mpz_cdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

bool IsInteger(const Rational& value) { return value.get_den() == 1; }

int Sign(const Rational& value) { return sgn(value); }
int Sign(const Integer& value) { return sgn(value); }

Vec MakeVec(std::initializer_list<Rational> values) { return Vec(values); }

Vec ParseVec(std::initializer_list<std::string_view> values) {
  Vec out;
  out.reserve(values.size());
  for (auto v : values) out.push_back(ParseRational(v));
  return out;
}

std::string ToString(std::span<const Rational> values) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ", ";
    os << values[i].get_str();
  }
  os << ')';
  return os.str();
}

Rational Dot(std::span<const Rational> lhs, std::span<const Rational> rhs) {
  if (lhs.size() != rhs.size()) {
    Fail(ErrorKind::kMalformedInput, "dimension mismatch in dot product");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) sum += lhs[i] * rhs[i];
  return sum;
}

Vec Add(std::span<const Rational> lhs, std::span<const Rational> rhs) {
  if (lhs.size() != rhs.size()) {
    Fail(ErrorKind::kMalformedInput, "dimension mismatch in vector sum");
  }
  Vec out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] + rhs[i];
  return out;
}

Vec Sub(std::span<const Rational> lhs, std::span<const Rational> rhs) {
  if (lhs.size() != rhs.size()) {
    Fail(ErrorKind::kMalformedInput, "dimension mismatch in vector difference");
  }
  Vec out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] - rhs[i];
  return out;
}

Vec Scale(const Rational& factor, std::span<const Rational> values) {
  Vec out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = factor * values[i];
  return out;
}

Vec Negate(std::span<const Rational> values) {
  Vec out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = -values[i];
  return out;
}

bool IsZero(std::span<const Rational> values) {
  for (const auto& v : values) {
    if (v != 0) return false;
  }
  return true;
}

bool IsIntegral(std::span<const Rational> values) {
  for (const auto& v : values) {
    if (!IsInteger(v)) return false;
  }
  return true;
}

Rational PrimitiveScale(std::span<const Rational> values) {
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& v : values) {
    if (v == 0) continue;
    Integer n = abs(v.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            v.get_den_mpz_t());
  }
  if (num_gcd == 0) {
    Fail(ErrorKind::kDegenerate, "primitive scale of the zero vector");
  }
  return MakeRational(num_gcd, den_lcm);
}

Vec Primitive(std::span<const Rational> values) {
  Rational t = PrimitiveScale(values);
  Vec out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] / t;
  return out;
}

Matrix Matrix::FromRows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      Fail(ErrorKind::kMalformedInput, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::Row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::Column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Vec> Matrix::Rows() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(Row(r));
  return out;
}

Vec Matrix::Apply(std::span<const Rational> x) const {
  if (x.size() != cols_) {
    Fail(ErrorKind::kMalformedInput, "dimension mismatch in A x");
  }
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < cols_; ++c) sum += (*this)(r, c) * x[c];
    out[r] = sum;
  }
  return out;
}

Vec Matrix::ApplyTransposed(std::span<const Rational> y) const {
  if (y.size() != rows_) {
    Fail(ErrorKind::kMalformedInput, "dimension mismatch in A^T y");
  }
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    Rational sum = 0;
    for (std::size_t r = 0; r < rows_; ++r) sum += (*this)(r, c) * y[r];
    out[c] = sum;
  }
  return out;
}

}  // namespace soccuts
