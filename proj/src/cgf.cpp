#include "soccuts/cgf.hpp"

#include <sstream>

#include "soccuts/errors.hpp"

namespace soccuts {

std::string_view ToString(GammaDomain domain) {
  switch (domain) {
    case GammaDomain::kInteriorSoc:
      return "InteriorSOC";
    case GammaDomain::kGammaJ:
      return "GammaJ";
    case GammaDomain::kInadmissible:
      return "Inadmissible";
  }
  return "unknown";
}

namespace {

void CheckIndex(std::size_t m, int j) {
  if (m < 2) {
    Fail(ErrorKind::kMalformedInput, "gamma needs dimension >= 2");
  }
  if (j < 1 || static_cast<std::size_t>(j) > m - 1) {
    Fail(ErrorKind::kMalformedInput,
         "index j=" + std::to_string(j) + " outside [1, " +
             std::to_string(m - 1) + "]");
  }
}

}  // namespace

std::vector<std::string> GammaViolations(std::span<const Rational> gamma,
                                         int j) {
  CheckIndex(gamma.size(), j);
  if (SocInterior(gamma)) return {};
  std::vector<std::string> out;
  const Rational& axis = gamma.back();
  Rational l1 = 0;
  for (std::size_t i = 0; i + 1 < gamma.size(); ++i) l1 += abs(gamma[i]);
  if (axis < l1) {
    out.push_back("gamma_m >= sum_{i<m} |gamma_i| violated (" +
                  axis.get_str() + " < " + l1.get_str() + ")");
  }
  const Rational& gj = gamma[static_cast<std::size_t>(j - 1)];
  if (!(axis > abs(gj))) {
    out.push_back("gamma_m > |gamma_j| violated (" + axis.get_str() +
                  " <= " + Rational(abs(gj)).get_str() + ")");
  }
  return out;
}

GammaDomain ClassifyGamma(std::span<const Rational> gamma, int j) {
  CheckIndex(gamma.size(), j);
  if (SocInterior(gamma)) return GammaDomain::kInteriorSoc;
  return GammaViolations(gamma, j).empty() ? GammaDomain::kGammaJ
                                           : GammaDomain::kInadmissible;
}

GammaFunction::GammaFunction(Vec gamma, int j)
    : gamma_(std::move(gamma)), j_(j), domain_(ClassifyGamma(gamma_, j)) {
  if (domain_ == GammaDomain::kInadmissible) {
    std::string why;
    for (const auto& v : GammaViolations(gamma_, j_)) why += "; " + v;
    Fail(ErrorKind::kDomain,
         "gamma " + ToString(std::span<const Rational>(gamma_)) +
             " is not admissible for j=" + std::to_string(j_) + why);
  }
}

Rational GammaFunction::operator()(std::span<const Rational> v) const {
  if (v.size() != gamma_.size()) {
    Fail(ErrorKind::kMalformedInput, "f_gamma argument has wrong dimension");
  }
  Rational inner = Dot(gamma_, v);
  if (v[static_cast<std::size_t>(j_ - 1)] != 0 && IsInteger(inner)) {
    return inner + 1;
  }
  return Rational(Ceil(inner));
}

Rational EvalFGamma(std::span<const Rational> gamma, int j,
                    std::span<const Rational> v) {
  return GammaFunction(Vec(gamma.begin(), gamma.end()), j)(v);
}

Rational AggregationFunction::operator()(std::span<const Rational> v) const {
  Rational inner = Dot(weights, v);
  return round ? Rational(Ceil(inner)) : inner;
}

Rational Evaluate(const CutFunction& f, std::span<const Rational> v) {
  return std::visit([&](const auto& fn) { return fn(v); }, f);
}

std::string CutInequality::ToString() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (pi[i] == 0) continue;
    if (!first) os << (pi[i] > 0 ? " + " : " - ");
    else if (pi[i] < 0) os << "-";
    Rational mag = abs(pi[i]);
    if (mag != 1) os << mag.get_str() << "*";
    os << "x" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  os << " >= " << pi0.get_str();
  return os.str();
}

CutInequality PrimitiveForm(const CutInequality& cut) {
  Rational t = PrimitiveScale(cut.pi);
  CutInequality out = cut;
  out.pi = Scale(1 / t, cut.pi);
  out.pi0 = cut.pi0 / t;
  return out;
}

namespace {

void CheckShapes(const Matrix& A, std::span<const Rational> b,
                 std::size_t f_dim) {
  if (A.rows() != b.size()) {
    Fail(ErrorKind::kMalformedInput,
         "dimension mismatch: A has " + std::to_string(A.rows()) +
             " rows, b has " + std::to_string(b.size()));
  }
  if (A.rows() != f_dim) {
    Fail(ErrorKind::kMalformedInput,
         "dimension mismatch: function acts on R^" + std::to_string(f_dim) +
             " but A has " + std::to_string(A.rows()) + " rows");
  }
}

Derivation Describe(const CutFunction& f) {
  Derivation d;
  if (const auto* g = std::get_if<GammaFunction>(&f)) {
    d.generator = "f_gamma";
    d.gamma = g->gamma();
    d.j = g->j();
    d.params["domain"] = std::string(ToString(g->domain()));
  } else {
    const auto& a = std::get<AggregationFunction>(f);
    d.generator = a.round ? "aggregation_ceil" : "aggregation_linear";
    d.weights = {a.weights};
  }
  return d;
}

std::size_t FunctionDimension(const CutFunction& f) {
  if (const auto* g = std::get_if<GammaFunction>(&f)) return g->dimension();
  const auto& a = std::get<AggregationFunction>(f);
  if (!SocContains(a.weights)) {
    Fail(ErrorKind::kDomain,
         "aggregation weights " +
             ToString(std::span<const Rational>(a.weights)) +
             " are not in the dual cone");
  }
  return a.weights.size();
}

}  // namespace

CutInequality MakeCut(const CutFunction& f, const Matrix& A,
                      std::span<const Rational> b) {
  CheckShapes(A, b, FunctionDimension(f));
  CutInequality cut;
  cut.pi.reserve(A.cols());
  for (std::size_t c = 0; c < A.cols(); ++c) {
    cut.pi.push_back(Evaluate(f, A.Column(c)));
  }
  cut.pi0 = Evaluate(f, b);
  cut.derivation = Describe(f);
  cut.derivation.params["variables"] = "non-negative";
  return cut;
}

CutInequality SplitAndProjectCut(const GammaFunction& f, const Matrix& A,
                                 std::span<const Rational> b) {
  CheckShapes(A, b, f.dimension());
  CutInequality cut;
  for (std::size_t c = 0; c < A.cols(); ++c) {
    Vec column = A.Column(c);
    Rational plus = f(column);
    Rational minus = f(Negate(column));
    if (plus != -minus) {
      Fail(ErrorKind::kProjectionInvalid,
           "column " + std::to_string(c + 1) + ": f(A^j) = " + plus.get_str() +
               " but -f(-A^j) = " + Rational(-minus).get_str() +
               "; the cut is only valid for non-negative variables");
    }
    cut.pi.push_back(plus);
  }
  cut.pi0 = f(b);
  cut.derivation = Describe(CutFunction(f));
  cut.derivation.generator = "f_gamma_split";
  cut.derivation.params["variables"] = "free";
  return cut;
}

CutInequality AggregationRoundCut(const std::vector<Vec>& weights,
                                  const std::vector<ConicConstraint>& blocks,
                                  bool require_integer_normal) {
  if (weights.size() != blocks.size()) {
    Fail(ErrorKind::kMalformedInput,
         "need one weight vector per conic block");
  }
  if (blocks.empty()) {
    Fail(ErrorKind::kMalformedInput, "aggregation over zero blocks");
  }
  const std::size_t n = blocks.front().dimension();
  Vec w(n);
  Rational w0 = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Validate(blocks[i]);
    if (blocks[i].dimension() != n) {
      Fail(ErrorKind::kMalformedInput, "blocks act on different dimensions");
    }
    if (weights[i].size() != blocks[i].cone_dimension()) {
      Fail(ErrorKind::kMalformedInput,
           "weight " + std::to_string(i + 1) + " has wrong dimension");
    }
    if (!SocContains(weights[i])) {
      Fail(ErrorKind::kDomain,
           "weight " + std::to_string(i + 1) + " is not in the dual cone");
    }
    w = Add(w, blocks[i].A.ApplyTransposed(weights[i]));
    w0 += Dot(weights[i], blocks[i].b);
  }
  if (IsZero(w)) {
    Fail(ErrorKind::kDegenerateAggregation,
         "aggregated normal is zero; the inequality 0 >= " + w0.get_str() +
             " carries no information");
  }
  CutInequality cut;
  cut.derivation.generator = "aggregation";
  cut.derivation.weights = weights;
  if (!require_integer_normal) {
    cut.pi = std::move(w);
    cut.pi0 = w0;
    return cut;
  }
  Rational tau = PrimitiveScale(w);
  cut.pi = Scale(1 / tau, w);
  cut.pi0 = Rational(Ceil(w0 / tau));
  cut.derivation.generator = "aggregation_round";
  cut.derivation.tau = tau;
  cut.derivation.params["unrounded_rhs"] = Rational(w0 / tau).get_str();
  return cut;
}

}  // namespace soccuts
