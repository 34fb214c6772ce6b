#include "soccuts/theorem2d.hpp"

#include <algorithm>
#include <array>

#include "soccuts/errors.hpp"

namespace soccuts {

namespace {

// Coefficient i multiplies t^i.
using Poly = std::vector<QuadraticSurd>;

Poly Trim(Poly p) {
  while (!p.empty() && p.back() == QuadraticSurd()) p.pop_back();
  return p;
}

Poly Plus(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
  return Trim(std::move(out));
}

Poly Times(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return Trim(std::move(out));
}

Poly TimesScalar(const QuadraticSurd& c, const Poly& p) { return Times(Poly{c}, p); }

// Sign as t -> infinity, or as t -> 0+.
int EventualSign(const Poly& p, bool to_zero) {
  if (to_zero) {
    for (const auto& c : p) {
      if (c.Sign() != 0) return c.Sign();
    }
    return 0;
  }
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (it->Sign() != 0) return it->Sign();
  }
  return 0;
}

// x(t) = X(t) / t^e, followed either to infinity or to 0+.
struct Path {
  std::array<Poly, 2> X;
  int e = 0;
  bool to_zero = false;
};

bool PathInside(const ConicBlock2D& block, const Path& path) {
  const Matrix& A = block.A();
  const Vec& b = block.b();
  Poly te = path.e == 0 ? Poly{1} : Poly{0, 1};
  Poly sum_sq;
  Poly last;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Poly u = Plus(TimesScalar(A(i, 0), path.X[0]), TimesScalar(A(i, 1), path.X[1]));
    u = Plus(u, TimesScalar(Rational(-b[i]), te));
    if (i + 1 == A.rows()) {
      last = u;
    } else {
      sum_sq = Plus(sum_sq, Times(u, u));
    }
  }
  if (EventualSign(last, path.to_zero) < 0) return false;
  Poly gap = Plus(Times(last, last), TimesScalar(-1, sum_sq));
  return EventualSign(gap, path.to_zero) >= 0;
}

bool PathInside(const ConicSet2D& W, const Path& path) {
  return std::all_of(W.blocks().begin(), W.blocks().end(),
                     [&](const ConicBlock2D& b) { return PathInside(b, path); });
}

Path RayPath(std::span<const QuadraticSurd> x0, std::span<const Rational> d) {
  Path p;
  for (int i = 0; i < 2; ++i) p.X[i] = Trim(Poly{x0[i], QuadraticSurd(d[i])});
  return p;
}

// c with c_t * A1 + c_s * A2 = pi.
std::pair<Rational, Rational> HyperbolaCoordinates(const ConicBlock2D& block,
                                                   std::span<const Rational> pi) {
  Vec t = block.A().Row(1), s = block.A().Row(2);
  Rational det = t[0] * s[1] - t[1] * s[0];
  return {(pi[0] * s[1] - pi[1] * s[0]) / det, (t[0] * pi[1] - t[1] * pi[0]) / det};
}

// The branch through 2k t = eta (k^2 - 1), 2k s = eta (k^2 + 1).
Path BranchPath(const ConicBlock2D& block, bool to_zero) {
  const Matrix& A = block.A();
  const Vec& b = block.b();
  Rational eta = abs(b[0]);
  Vec t = A.Row(1), s = A.Row(2);
  Rational det = t[0] * s[1] - t[1] * s[0];
  Poly T = Trim(Poly{QuadraticSurd(Rational(-eta / 2)), QuadraticSurd(b[1]),
                     QuadraticSurd(Rational(eta / 2))});
  Poly S = Trim(Poly{QuadraticSurd(Rational(eta / 2)), QuadraticSurd(b[2]),
                     QuadraticSurd(Rational(eta / 2))});
  Path p;
  p.e = 1;
  p.to_zero = to_zero;
  p.X[0] = Plus(TimesScalar(Rational(s[1] / det), T), TimesScalar(Rational(-t[1] / det), S));
  p.X[1] = Plus(TimesScalar(Rational(-s[0] / det), T), TimesScalar(Rational(t[0] / det), S));
  return p;
}

std::vector<Vec> OrthogonalGenerators(const ConicSet2D& W, std::span<const Rational> pi) {
  std::vector<Vec> out;
  for (const auto& g : W.RecessionGenerators()) {
    if (Dot(pi, g) == 0) out.push_back(g);
  }
  return out;
}

SurdVec HalfSpaceBoundaryPoint(const ConicBlock2D& block) {
  Vec a = block.halfspace_normal();
  QuadraticSurd scale = block.halfspace_threshold() * QuadraticSurd(Rational(1 / Dot(a, a)));
  return {scale * QuadraticSurd(a[0]), scale * QuadraticSurd(a[1])};
}

void RequireDirection(std::span<const Rational> pi) {
  if (pi.size() != 2 || !IsIntegral(pi) || IsZero(pi) || PrimitiveScale(pi) != 1) {
    Fail(ErrorKind::kMalformedInput,
         "pi must be a primitive integer vector in the plane, got " + ToString(pi));
  }
}

std::string Index1(std::size_t i) { return std::to_string(i + 1); }

Integer Beta(const QuadraticSurd& alpha) {
  if (alpha.IsRational() && IsInteger(alpha.AsRational())) {
    return Integer(alpha.Floor() + 1);
  }
  return alpha.Ceil();
}

struct Derived {
  CutInequality cut;
  PathwayRecord record;
};

// sigma^T x >= rhs for a pi on the boundary of rec*(W).
Derived BoundaryCut(const ConicSet2D& W, std::span<const Rational> sigma) {
  BindingConic bc = FindBindingConic(W, sigma);
  const ConicBlock2D& block = W.blocks()[bc.index];
  const QuadraticSurd& alpha = bc.support.value;
  Derived out;
  out.record.block = bc.index;
  out.record.alpha = alpha;
  if (block.kind() == ConicKind::kHalfSpace) {
    Integer r = alpha.Ceil();
    out.record.kind = Pathway::kHalfSpaceRounding;
    out.record.rounded = r;
    out.cut.pi = Vec(sigma.begin(), sigma.end());
    out.cut.pi0 = Rational(r);
    out.cut.derivation.generator = "halfspace_rounding";
    out.cut.derivation.params["block"] = Index1(bc.index);
    out.cut.derivation.params["alpha"] = alpha.ToString();
    out.cut.derivation.params["ceil_alpha"] = r.get_str();
    return out;
  }
  Integer beta = Beta(alpha);
  auto cuts = HyperbolaCuts(block);
  CutInequality cut = *bc.asymptote == 1 ? cuts.first : cuts.second;
  if (cut.pi != Vec(sigma.begin(), sigma.end()) || cut.pi0 != Rational(beta)) {
    Fail(ErrorKind::kInternalInconsistency,
         "asymptote cut " + cut.ToString() + " differs from the rounding with beta = " +
             beta.get_str());
  }
  cut.derivation.params["block"] = Index1(bc.index);
  cut.derivation.params["alpha"] = alpha.ToString();
  cut.derivation.params["beta"] = beta.get_str();
  out.cut = cut;
  out.record.kind = Pathway::kHyperbolaCut;
  out.record.asymptote = bc.asymptote;
  out.record.rounded = beta;
  return out;
}

// sigma^T x >= rhs through the pruned outer approximation of
// { x in W : sigma^T x <= rhs }.
std::optional<Derived> BoundedCut(const ConicSet2D& W, std::span<const Rational> sigma,
                                  const Integer& rhs) {
  OuterApproximation oa = OuterApproxBounded(W, sigma, Rational(rhs));
  if (!oa.pruned) return std::nullopt;
  Derived out;
  out.cut.pi = Vec(sigma.begin(), sigma.end());
  out.cut.pi0 = Rational(rhs);
  out.cut.derivation.generator = "bounded_outer_approx";
  out.cut.derivation.params["p"] = std::to_string(oa.pruned->size());
  out.cut.derivation.params["p_prime"] = std::to_string(oa.p_prime);
  out.cut.derivation.params["p_bound"] = "4";
  out.cut.derivation.params["epsilon"] = ToString(oa.epsilon);
  out.record.kind = Pathway::kBoundedOuterApprox;
  out.record.P = oa.P;
  out.record.pruned = oa.pruned;
  out.record.trace = oa.trace;
  return out;
}

Certificate NotProven(Certificate cert, std::string why) {
  cert.kind = CertificateKind::kNotProven;
  cert.cuts.clear();
  cert.pathways.clear();
  cert.diagnostics.push_back(std::move(why));
  return cert;
}

}  // namespace

std::string_view ToString(Pathway pathway) {
  switch (pathway) {
    case Pathway::kBoundedOuterApprox: return "BoundedOuterApprox";
    case Pathway::kHyperbolaCut: return "HyperbolaCut";
    case Pathway::kHalfSpaceRounding: return "HalfSpaceRounding";
  }
  return "?";
}

std::string_view ToString(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kEmpty: return "Empty";
    case CertificateKind::kFace: return "Face";
    case CertificateKind::kNotProven: return "NotProven";
  }
  return "?";
}

bool TailInside(const ConicSet2D& W, std::span<const QuadraticSurd> x0,
                std::span<const Rational> d) {
  return PathInside(W, RayPath(x0, d));
}

BindingConic FindBindingConic(const ConicSet2D& W, std::span<const Rational> pi) {
  if (pi.size() != 2 || IsZero(pi)) {
    Fail(ErrorKind::kMalformedInput, "pi must be a nonzero vector in the plane");
  }
  if (!W.InRecessionDual(pi)) {
    Fail(ErrorKind::kHypothesisViolation,
         "pi = " + ToString(pi) + " is outside rec*(W); pi^T x is unbounded below");
  }
  if (W.InRecessionDualInterior(pi)) {
    Fail(ErrorKind::kHypothesisViolation,
         "pi = " + ToString(pi) + " is interior to rec*(W)");
  }
  std::vector<std::pair<std::size_t, SupportResult>> bounded;
  for (std::size_t i = 0; i < W.size(); ++i) {
    SupportResult s = SupportMinimize(W.blocks()[i], pi);
    if (s.bounded) bounded.emplace_back(i, std::move(s));
  }
  if (bounded.empty()) {
    Fail(ErrorKind::kHypothesisViolation,
         "inf pi^T x over W is unbounded for pi = " + ToString(pi));
  }
  QuadraticSurd best = bounded.front().second.value;
  for (const auto& [i, s] : bounded) best = std::max(best, s.value);

  for (auto& [i, s] : bounded) {
    if (s.value != best) continue;
    const ConicBlock2D& block = W.blocks()[i];
    switch (block.kind()) {
      case ConicKind::kEllipse:
      case ConicKind::kParabola:
        Fail(ErrorKind::kInternalInconsistency,
             "block " + Index1(i) + " (" + std::string(ToString(block.kind())) +
                 ") attains the infimum along a boundary direction");
      case ConicKind::kHalfSpace: {
        SurdVec x0 = HalfSpaceBoundaryPoint(block);
        for (const Vec& d : OrthogonalGenerators(W, pi)) {
          if (TailInside(W, x0, d)) return {i, std::move(s), std::nullopt};
        }
        break;
      }
      case ConicKind::kHyperbolaBranch: {
        auto [ct, cs] = HyperbolaCoordinates(block, pi);
        int asymptote = 0;
        if (ct == cs) asymptote = 1;
        if (ct == -cs) asymptote = 2;
        if (asymptote == 0) break;
        if (PathInside(W, BranchPath(block, asymptote == 1))) {
          return {i, std::move(s), asymptote};
        }
        break;
      }
    }
  }
  Fail(ErrorKind::kInternalInconsistency,
       "no half-space or asymptotic hyperbola block attains inf pi^T x = " + best.ToString());
}

std::optional<Vec> FindInteriorPoint(const ConicSet2D& W) {
  if (W.size() == 0) return Vec{0, 0};
  std::vector<Vec> candidates;
  Vec mean{0, 0};
  for (const auto& b : W.blocks()) {
    candidates.push_back(b.InteriorPoint());
    mean = Add(mean, b.InteriorPoint());
  }
  candidates.push_back(Scale(Rational(1, W.size()), mean));
  for (const auto& c : candidates) {
    if (W.ContainsStrictly(c)) return c;
  }
  Rational lo1 = candidates[0][0], hi1 = lo1, lo2 = candidates[0][1], hi2 = lo2;
  for (const auto& c : candidates) {
    lo1 = std::min(lo1, c[0]);
    hi1 = std::max(hi1, c[0]);
    lo2 = std::min(lo2, c[1]);
    hi2 = std::max(hi2, c[1]);
  }
  lo1 = Rational(Floor(lo1) - 1);
  lo2 = Rational(Floor(lo2) - 1);
  hi1 = Rational(Ceil(hi1) + 1);
  hi2 = Rational(Ceil(hi2) + 1);
  for (int level = 0; level <= 10; ++level) {
    Rational step(1, 1L << level);
    Rational n1 = (hi1 - lo1) / step + 1, n2 = (hi2 - lo2) / step + 1;
    if (n1 * n2 > 250000) break;
    for (Rational x = lo1; x <= hi1; x += step) {
      for (Rational y = lo2; y <= hi2; y += step) {
        Vec p{x, y};
        if (W.ContainsStrictly(p)) return p;
      }
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> RedundantBlocks(const ConicSet2D& W) {
  std::vector<std::size_t> out;
  if (W.size() < 2) return out;
  const std::vector<Vec> dirs = {Vec{1, 0},  Vec{-1, 0}, Vec{0, 1},  Vec{0, -1},
                                 Vec{1, 1},  Vec{-1, -1}, Vec{1, -1}, Vec{-1, 1}};
  for (std::size_t i = 0; i < W.size(); ++i) {
    std::vector<ConicBlock2D> rest;
    for (std::size_t k = 0; k < W.size(); ++k) {
      if (k != i) rest.push_back(W.blocks()[k]);
    }
    ConicSet2D others(std::move(rest));
    bool redundant = true;
    for (const auto& u : dirs) {
      SupportResult si = SupportMinimize(W.blocks()[i], u);
      if (!si.bounded) continue;
      auto lb = others.SupportLowerBound(u);
      if (!lb || *lb < si.value) {
        redundant = false;
        break;
      }
    }
    if (redundant) out.push_back(i);
  }
  return out;
}

bool LinearlyInconsistent(const CutInequality& c1, const CutInequality& c2) {
  if (IsZero(c1.pi)) return c1.pi0 > 0;
  if (IsZero(c2.pi)) return c2.pi0 > 0;
  std::size_t k = c1.pi[0] != 0 ? 0 : 1;
  Rational lambda = -c2.pi[k] / c1.pi[k];
  if (lambda <= 0 || c2.pi != Scale(-lambda, c1.pi)) return false;
  return c1.pi0 + c2.pi0 / lambda > 0;
}

Certificate CertifyEmpty(const ConicSet2D& W, const Box& box) {
  Certificate cert;
  cert.box = box;
  auto points = EnumerateIntegerPoints(W, box);
  cert.oracle_points = points.size();
  if (!points.empty()) {
    Fail(ErrorKind::kNotEmpty, "W contains the integer point " + ToString(points.front()));
  }
  if (!FindInteriorPoint(W)) return NotProven(cert, "no interior point of W found");
  for (std::size_t i : RedundantBlocks(W)) {
    cert.diagnostics.push_back("block " + Index1(i) + " appears redundant");
  }
  if (!cert.diagnostics.empty()) return NotProven(cert, "non-redundancy check failed");

  auto band = LatticeFreeBand(W);
  if (!band) {
    return NotProven(cert, "no lattice-free band with max-norm <= 64 was found");
  }
  cert.diagnostics.push_back("band " + ToString(band->pi) + ": " + band->pi0.get_str() +
                             " <= pi^T x <= " + Integer(band->pi0 + 1).get_str());
  const Vec neg = Negate(band->pi);
  const std::array<std::pair<Vec, Integer>, 2> targets = {
      std::pair{band->pi, Integer(band->pi0 + 1)}, std::pair{neg, Integer(-band->pi0)}};
  for (const auto& [sigma, rhs] : targets) {
    Derived d;
    if (W.IsBounded()) {
      auto bd = BoundedCut(W, sigma, rhs);
      if (!bd) {
        return NotProven(cert, "outer approximation for " + ToString(sigma) +
                                   " could not be pruned to 4 inequalities");
      }
      d = std::move(*bd);
    } else {
      d = BoundaryCut(W, sigma);
      if (d.cut.pi0 != Rational(rhs)) {
        Fail(ErrorKind::kInternalInconsistency,
             "cut " + d.cut.ToString() + " does not reach the band edge " + rhs.get_str());
      }
    }
    cert.cuts.push_back(std::move(d.cut));
    cert.pathways.push_back(std::move(d.record));
  }
  if (!LinearlyInconsistent(cert.cuts[0], cert.cuts[1])) {
    Fail(ErrorKind::kInternalInconsistency, "emptiness cuts are jointly feasible");
  }
  cert.kind = CertificateKind::kEmpty;
  return cert;
}

Certificate DeriveFace(const ConicSet2D& W, std::span<const Rational> pi,
                       const Integer& pi0, const Box& box) {
  RequireDirection(pi);
  Certificate cert;
  cert.box = box;
  auto points = EnumerateIntegerPoints(W, box);
  cert.oracle_points = points.size();
  if (std::none_of(points.begin(), points.end(),
                   [&](const Vec& z) { return W.ContainsStrictly(z); })) {
    Fail(ErrorKind::kHypothesisViolation,
         "no integer point in the interior of W within " + ToString(box));
  }
  const Rational rhs(pi0);
  Rational lowest = Dot(pi, points.front());
  for (const auto& z : points) {
    Rational v = Dot(pi, z);
    if (v < rhs) {
      Fail(ErrorKind::kInvalidInequality,
           ToString(pi) + "^T x >= " + pi0.get_str() + " is violated at " + ToString(z));
    }
    lowest = std::min(lowest, v);
  }
  if (!W.InRecessionDual(pi)) {
    Fail(ErrorKind::kInvalidInequality,
         "pi = " + ToString(pi) + " is outside rec*(W), so no inequality with this "
                                  "normal is valid");
  }
  Derived d;
  if (W.InRecessionDualInterior(pi)) {
    if (lowest != rhs) {
      Fail(ErrorKind::kNotAFace, "not tight; the face with this normal is " + ToString(pi) +
                                     "^T x >= " + ToString(lowest));
    }
    auto bd = BoundedCut(W, pi, pi0);
    if (!bd) {
      Fail(ErrorKind::kInternalInconsistency,
           "outer approximation could not be pruned to 4 inequalities");
    }
    d = std::move(*bd);
  } else {
    if (std::none_of(W.blocks().begin(), W.blocks().end(), [&](const ConicBlock2D& b) {
          return SupportMinimize(b, pi).bounded;
        })) {
      Fail(ErrorKind::kInvalidInequality,
           "pi^T x is unbounded below on W for pi = " + ToString(pi));
    }
    d = BoundaryCut(W, pi);
    if (d.cut.pi0 != rhs) {
      Fail(ErrorKind::kNotAFace, "the face with this normal is " + d.cut.ToString() +
                                     " (" + std::string(ToString(d.record.kind)) + ")");
    }
    bool tight = std::any_of(points.begin(), points.end(),
                             [&](const Vec& z) { return Dot(pi, z) == rhs; });
    if (!tight) {
      Rational s = rhs / Dot(pi, pi);
      SurdVec x0 = {QuadraticSurd(Rational(s * pi[0])), QuadraticSurd(Rational(s * pi[1]))};
      for (const Vec& g : OrthogonalGenerators(W, pi)) tight = tight || TailInside(W, x0, g);
    }
    if (!tight) {
      Fail(ErrorKind::kNotAFace,
           d.cut.ToString() + " is valid but touches no integer point of W");
    }
  }
  cert.cuts.push_back(std::move(d.cut));
  cert.pathways.push_back(std::move(d.record));
  cert.kind = CertificateKind::kFace;
  return cert;
}

}  // namespace soccuts
