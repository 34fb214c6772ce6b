#include "soccuts/hull.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "soccuts/errors.hpp"

namespace soccuts {

std::string ToString(const Box& box) {
  return "[" + std::to_string(box.lo1) + ", " + std::to_string(box.hi1) +
         "] x [" + std::to_string(box.lo2) + ", " + std::to_string(box.hi2) +
         "]";
}

namespace {

Vec Perp(std::span<const Rational> v) { return {-v[1], v[0]}; }

Rational Cross(std::span<const Rational> a, std::span<const Rational> b) {
  return a[0] * b[1] - a[1] * b[0];
}

bool SatisfiesAll(const std::vector<Vec>& normals, std::span<const Rational> v) {
  for (const auto& n : normals) {
    if (Dot(n, v) < 0) return false;
  }
  return true;
}

bool AllSatisfied(const std::vector<CutInequality>& ineqs,
                  std::span<const Rational> x) {
  for (const auto& c : ineqs) {
    if (!c.IsSatisfiedBy(x)) return false;
  }
  return true;
}

// Exact sum when the radicands agree, otherwise a rational lower bound.
QuadraticSurd AddLower(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (a.IsRational() || b.IsRational() || a.radicand() == b.radicand()) {
    return a + b;
  }
  return QuadraticSurd(a.LowerBound() + b.LowerBound());
}

Rational RationalLower(const QuadraticSurd& x) {
  return x.IsRational() ? x.AsRational() : x.LowerBound();
}

CutInequality Inequality(Vec pi, Rational pi0, std::string generator) {
  CutInequality c;
  c.pi = std::move(pi);
  c.pi0 = std::move(pi0);
  c.derivation.generator = std::move(generator);
  return c;
}

// Andrew's monotone chain; drops collinear points. Counter-clockwise.
std::vector<Vec> HullVertices(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto turn = [](const Vec& o, const Vec& a, const Vec& b) {
    return Cross(Sub(a, o), Sub(b, o));
  };
  std::vector<Vec> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

std::vector<Vec> ConeGenerators(const std::vector<Vec>& normals) {
  std::vector<Vec> candidates;
  if (normals.empty()) {
    candidates = {Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}};
  }
  for (const auto& n : normals) {
    if (IsZero(n)) continue;
    Vec p = Perp(n);
    candidates.push_back(p);
    candidates.push_back(Negate(p));
    candidates.push_back(n);
  }
  std::vector<Vec> out;
  for (const auto& c : candidates) {
    if (!SatisfiesAll(normals, c)) continue;
    Vec prim = Primitive(c);
    if (std::find(out.begin(), out.end(), prim) == out.end()) out.push_back(prim);
  }
  return out;
}

ConicSet2D::ConicSet2D(std::vector<ConicBlock2D> blocks)
    : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    for (const auto& n : b.RecessionNormals()) normals_.push_back(n);
  }
  generators_ = ConeGenerators(normals_);
}

ConicSet2D ConicSet2D::With(ConicBlock2D extra) const {
  std::vector<ConicBlock2D> blocks = blocks_;
  blocks.push_back(std::move(extra));
  return ConicSet2D(std::move(blocks));
}

bool ConicSet2D::Contains(std::span<const Rational> x) const {
  for (const auto& b : blocks_) {
    if (!b.Contains(x)) return false;
  }
  return true;
}

bool ConicSet2D::ContainsStrictly(std::span<const Rational> x) const {
  for (const auto& b : blocks_) {
    if (!b.ContainsStrictly(x)) return false;
  }
  return true;
}

bool ConicSet2D::IsPointed() const {
  for (const auto& g : generators_) {
    if (SatisfiesAll(normals_, Negate(g))) return false;
  }
  return true;
}

bool ConicSet2D::InRecessionDual(std::span<const Rational> pi) const {
  for (const auto& g : generators_) {
    if (Dot(pi, g) < 0) return false;
  }
  return true;
}

bool ConicSet2D::InRecessionDualInterior(std::span<const Rational> pi) const {
  for (const auto& g : generators_) {
    if (Dot(pi, g) <= 0) return false;
  }
  return true;
}

std::optional<QuadraticSurd> ConicSet2D::SupportLowerBound(
    std::span<const Rational> pi) const {
  std::optional<QuadraticSurd> best;
  auto offer = [&](const QuadraticSurd& v) {
    if (!best || v > *best) best = v;
  };
  for (const auto& b : blocks_) {
    auto r = SupportMinimize(b, pi);
    if (r.bounded) offer(r.value);
  }
  if (blocks_.size() < 2) return best;

  std::vector<Vec> unique_dirs;
  for (const auto& d : normals_) {
    if (IsZero(d)) continue;
    Vec p = Primitive(d);
    if (std::find(unique_dirs.begin(), unique_dirs.end(), p) == unique_dirs.end()) {
      unique_dirs.push_back(p);
    }
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if (i == k) continue;
      for (const auto& g : unique_dirs) {
        auto si = SupportMinimize(blocks_[i], g);
        if (!si.bounded) continue;
        for (const auto& h : unique_dirs) {
          Rational det = Cross(g, h);
          if (det == 0) continue;
          // pi = lambda g + mu h.
          Rational lambda = Cross(pi, h) / det;
          Rational mu = Cross(g, pi) / det;
          if (lambda <= 0 || mu <= 0) continue;
          auto sk = SupportMinimize(blocks_[k], h);
          if (!sk.bounded) continue;
          offer(AddLower(si.value * QuadraticSurd(lambda),
                         sk.value * QuadraticSurd(mu)));
        }
      }
    }
  }
  return best;
}

bool Polyhedron2D::Contains(std::span<const Rational> x) const {
  if (empty) return false;
  return AllSatisfied(inequalities, x);
}

std::optional<std::vector<Vec>> BoundedVertices(
    const std::vector<CutInequality>& inequalities) {
  std::vector<Vec> normals;
  for (const auto& c : inequalities) normals.push_back(c.pi);
  if (!ConeGenerators(normals).empty()) return std::nullopt;
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    for (std::size_t j = i + 1; j < inequalities.size(); ++j) {
      const auto& a = inequalities[i];
      const auto& b = inequalities[j];
      Rational det = Cross(a.pi, b.pi);
      if (det == 0) continue;
      Vec x{(a.pi0 * b.pi[1] - b.pi0 * a.pi[1]) / det,
            (a.pi[0] * b.pi0 - b.pi[0] * a.pi0) / det};
      if (AllSatisfied(inequalities, x)) pts.push_back(std::move(x));
    }
  }
  return HullVertices(std::move(pts));
}

std::optional<std::vector<Vec>> PolygonIntegerPoints(
    const std::vector<CutInequality>& inequalities, long max_points) {
  auto verts = BoundedVertices(inequalities);
  if (!verts) return std::nullopt;
  std::vector<Vec> out;
  if (verts->empty()) return out;
  Rational lo1 = (*verts)[0][0], hi1 = lo1, lo2 = (*verts)[0][1], hi2 = lo2;
  for (const auto& v : *verts) {
    lo1 = std::min(lo1, v[0]);
    hi1 = std::max(hi1, v[0]);
    lo2 = std::min(lo2, v[1]);
    hi2 = std::max(hi2, v[1]);
  }
  Integer a1 = Ceil(lo1), b1 = Floor(hi1), a2 = Ceil(lo2), b2 = Floor(hi2);
  if (a1 > b1 || a2 > b2) return out;
  Integer count = (b1 - a1 + 1) * (b2 - a2 + 1);
  if (count > max_points) return std::nullopt;
  for (Integer x = a1; x <= b1; ++x) {
    for (Integer y = a2; y <= b2; ++y) {
      Vec p{Rational(x), Rational(y)};
      if (AllSatisfied(inequalities, p)) out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Vec> EnumerateIntegerPoints(const ConicSet2D& W, const Box& box) {
  std::vector<Vec> out;
  for (long x = box.lo1; x <= box.hi1; ++x) {
    for (long y = box.lo2; y <= box.hi2; ++y) {
      Vec p{Rational(x), Rational(y)};
      if (W.Contains(p)) out.push_back(std::move(p));
    }
  }
  return out;
}

Polyhedron2D ConvexHull(std::vector<Vec> points) {
  Polyhedron2D out;
  out.vertices = HullVertices(std::move(points));
  const auto& v = out.vertices;
  auto add = [&](Vec n, const Vec& through) {
    Rational tau = PrimitiveScale(n);
    n = Scale(1 / tau, n);
    Rational rhs = Dot(n, through);
    out.inequalities.push_back(Inequality(std::move(n), rhs, "integer_hull_facet"));
  };
  if (v.empty()) {
    out.empty = true;
  } else if (v.size() == 1) {
    add(Vec{1, 0}, v[0]);
    add(Vec{-1, 0}, v[0]);
    add(Vec{0, 1}, v[0]);
    add(Vec{0, -1}, v[0]);
  } else if (v.size() == 2) {
    Vec e = Sub(v[1], v[0]);
    add(Perp(e), v[0]);
    add(Negate(Perp(e)), v[0]);
    add(e, v[0]);
    add(Negate(e), v[1]);
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vec& p = v[i];
      const Vec& q = v[(i + 1) % v.size()];
      add(Perp(Sub(q, p)), p);
    }
  }
  return out;
}

Polyhedron2D IntegerHullWindow(const ConicSet2D& W, const Box& box) {
  Polyhedron2D hull = ConvexHull(EnumerateIntegerPoints(W, box));
  hull.window_truncated = !W.IsBounded();
  return hull;
}

namespace {

struct Separator {
  Vec pi;
  SupportResult support;
};

Separator SeparateFromBlock(const ConicBlock2D& block, std::span<const Rational> z) {
  auto separates = [&](const Vec& pi, Separator& out) {
    if (IsZero(pi)) return false;
    auto res = SupportMinimize(block, pi);
    if (!res.bounded || !(res.value > QuadraticSurd(Dot(pi, z)))) return false;
    out = {pi, std::move(res)};
    return true;
  };
  Separator out;
  switch (block.kind()) {
    case ConicKind::kHalfSpace:
      if (separates(block.halfspace_normal(), out)) return out;
      break;
    case ConicKind::kEllipse:
    case ConicKind::kParabola: {
      // Negative gradient of the convex squared form at z.
      Vec grad = Sub(block.M().Apply(z), block.g());
      if (separates(Negate(grad), out)) return out;
      break;
    }
    case ConicKind::kHyperbolaBranch: {
      const Matrix& A = block.A();
      const Vec& b = block.b();
      Vec t_row = A.Row(1), s_row = A.Row(2);
      Rational eta = abs(b[0]);
      Rational tz = Dot(t_row, z) - b[1];
      Rational sz = Dot(s_row, z) - b[2];
      if (sz < eta && separates(s_row, out)) return out;
      QuadraticSurd rho = QuadraticSurd::Sqrt(eta * eta + tz * tz);
      for (unsigned bits = 4; bits <= 256; bits += 4) {
        Rational ct = -tz / rho.UpperBound(bits);
        if (separates(Add(Scale(ct, t_row), s_row), out)) return out;
      }
      break;
    }
  }
  Fail(ErrorKind::kInternalInconsistency,
       "failed to separate " + ToString(z) + " from a " +
           std::string(ToString(block.kind())) + " block");
}

}  // namespace

CutInequality RationalSeparate(const ConicSet2D& W, std::span<const Rational> z) {
  if (z.size() != 2) Fail(ErrorKind::kMalformedInput, "point must be 2D");
  if (W.Contains(z)) {
    Fail(ErrorKind::kNotSeparable, "point " + ToString(z) + " lies in the set");
  }
  if (!W.IsPointed()) {
    Fail(ErrorKind::kUnsupported,
         "recession cone contains a line, so rec* has empty interior");
  }
  for (std::size_t i = 0; i < W.size(); ++i) {
    const auto& block = W.blocks()[i];
    if (block.Contains(z)) continue;
    Separator sep = SeparateFromBlock(block, z);
    const Rational at_z = Dot(sep.pi, z);
    Rational pi0;
    if (sep.support.value.IsRational()) {
      pi0 = sep.support.value.AsRational();
    } else {
      for (unsigned bits = 8;; bits += 8) {
        pi0 = sep.support.value.LowerBound(bits);
        if (pi0 > at_z) break;
      }
    }
    Rational tau = PrimitiveScale(sep.pi);
    CutInequality cut = Inequality(Scale(1 / tau, sep.pi), pi0 / tau,
                                   "rational_separation");
    auto& params = cut.derivation.params;
    params["block"] = std::to_string(i + 1);
    params["separated_point"] = ToString(z);
    params["support"] = (sep.support.value * QuadraticSurd(1 / tau)).ToString();
    if (sep.support.certificate) {
      std::string y;
      for (const auto& v : *sep.support.certificate) {
        if (!y.empty()) y += "; ";
        y += (v * QuadraticSurd(1 / tau)).ToString();
      }
      params["dual_weight"] = "(" + y + ")";
    }
    return cut;
  }
  Fail(ErrorKind::kInternalInconsistency, "no violated block found");
}

OuterApproximation OuterApproxBounded(const ConicSet2D& T,
                                      std::span<const Rational> pi_span,
                                      const Rational& pi0) {
  const Vec pi(pi_span.begin(), pi_span.end());
  if (pi.size() != 2 || IsZero(pi) || !IsIntegral(pi)) {
    Fail(ErrorKind::kMalformedInput, "pi must be a nonzero integer 2-vector");
  }
  if (!T.InRecessionDualInterior(pi)) {
    Fail(ErrorKind::kHypothesisViolation,
         "B = {x in T : pi^T x <= pi0} is unbounded: pi = " + ToString(pi) +
             " is not interior to rec*(T)");
  }
  OuterApproximation out;
  const Vec v = Perp(pi);
  Rational eps = 1;
  for (int i = 0;; ++i) {
    if (T.InRecessionDualInterior(Add(pi, Scale(eps, v))) &&
        T.InRecessionDualInterior(Sub(pi, Scale(eps, v)))) {
      break;
    }
    if (i > 256) Fail(ErrorKind::kInternalInconsistency, "epsilon search failed");
    eps /= 2;
  }
  out.epsilon = eps;
  out.trace.push_back("epsilon = " + eps.get_str());

  std::vector<CutInequality> conic;
  for (const Vec& w : {Add(pi, Scale(eps, v)), Sub(pi, Scale(eps, v)), pi}) {
    auto lb = T.SupportLowerBound(w);
    if (!lb) {
      Fail(ErrorKind::kUnsupported,
           "no support bound for direction " + ToString(w) + " over T");
    }
    CutInequality c = Inequality(w, RationalLower(*lb), "dual_aggregation");
    c.derivation.params["support"] = lb->ToString();
    conic.push_back(std::move(c));
  }
  CutInequality cap = Inequality(Negate(pi), -pi0, "face_halfspace");

  auto all = [&] {
    std::vector<CutInequality> ineqs{cap};
    ineqs.insert(ineqs.end(), conic.begin(), conic.end());
    return ineqs;
  };
  auto in_b = [&](const Vec& z) { return Dot(pi, z) <= pi0 && T.Contains(z); };

  for (int round = 0;; ++round) {
    auto pts = PolygonIntegerPoints(all());
    if (!pts) {
      Fail(ErrorKind::kInternalInconsistency, "outer approximation is unbounded");
    }
    std::vector<Vec> strays;
    for (const auto& z : *pts) {
      if (!in_b(z)) strays.push_back(z);
    }
    if (strays.empty()) break;
    if (round > 64) Fail(ErrorKind::kInternalInconsistency, "separation loop");
    for (const auto& z : strays) {
      bool already = false;
      for (const auto& c : conic) already = already || !c.IsSatisfiedBy(z);
      if (already) continue;
      conic.push_back(RationalSeparate(T, z));
      out.trace.push_back("separated stray integer point " + ToString(z));
    }
  }

  out.p_prime = conic.size();
  out.P.inequalities = all();
  auto verts = BoundedVertices(out.P.inequalities);
  out.P.vertices = verts ? *verts : std::vector<Vec>{};
  out.P.empty = out.P.vertices.empty();
  out.empty = out.P.empty;
  if (out.empty) {
    out.trace.push_back("B is empty");
    return out;
  }

  // Subsets of at most 2^n = 4 inequalities keeping pi^T x < pi0 lattice-free.
  const Integer below = Ceil(pi0) - 1;
  const CutInequality strip = Inequality(Negate(pi), Rational(-below), "strip");
  const std::size_t n = conic.size();
  std::vector<std::size_t> idx;
  std::function<bool(std::size_t, std::size_t)> search =
      [&](std::size_t start, std::size_t left) -> bool {
    if (left == 0) {
      std::vector<CutInequality> ineqs{strip};
      for (auto i : idx) ineqs.push_back(conic[i]);
      auto pts = PolygonIntegerPoints(ineqs, 1'000'000);
      return pts && pts->empty();
    }
    for (std::size_t i = start; i < n; ++i) {
      idx.push_back(i);
      if (search(i + 1, left - 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size <= std::min<std::size_t>(4, n); ++size) {
    idx.clear();
    if (search(0, size)) {
      std::vector<CutInequality> pruned;
      for (auto i : idx) {
        CutInequality c = conic[i];
        c.derivation.params["p"] = std::to_string(size);
        c.derivation.params["p_prime"] = std::to_string(n);
        c.derivation.params["p_bound"] = "4";
        pruned.push_back(std::move(c));
      }
      out.trace.push_back("pruned to p = " + std::to_string(size) + " of p' = " +
                          std::to_string(n) + " inequalities");
      out.pruned = std::move(pruned);
      return out;
    }
  }
  out.trace.push_back("no subset of at most 4 inequalities keeps pi^T x <= " +
                      below.get_str() + " lattice-free");
  return out;
}

std::optional<Band> LatticeFreeBand(const ConicSet2D& W, long max_norm) {
  for (long norm = 1; norm <= max_norm; ++norm) {
    for (long p2 = 0; p2 <= norm; ++p2) {
      for (long p1 = -norm; p1 <= norm; ++p1) {
        if (std::max(std::abs(p1), p2) != norm) continue;
        if (p2 == 0 && p1 <= 0) continue;
        if (std::gcd(p1, p2) != 1) continue;
        Vec pi{p1, p2};
        Vec neg = Negate(pi);
        if (!W.InRecessionDual(pi) || !W.InRecessionDual(neg)) continue;
        auto lower = W.SupportLowerBound(pi);
        auto neg_lower = W.SupportLowerBound(neg);
        if (!lower || !neg_lower) continue;
        QuadraticSurd upper = -*neg_lower;
        Integer pi0 = lower->Floor();
        if (upper <= QuadraticSurd(Rational(pi0 + 1))) {
          return Band{pi, pi0, *lower, upper};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace soccuts
