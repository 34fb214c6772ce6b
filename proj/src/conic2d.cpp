#include "soccuts/conic2d.hpp"

#include <array>

#include "soccuts/errors.hpp"

namespace soccuts {

std::string_view ToString(ConicKind kind) {
  switch (kind) {
    case ConicKind::kHalfSpace:
      return "HalfSpace";
    case ConicKind::kEllipse:
      return "Ellipse";
    case ConicKind::kParabola:
      return "Parabola";
    case ConicKind::kHyperbolaBranch:
      return "HyperbolaBranch";
  }
  return "unknown";
}

namespace {

Rational Det(const Matrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

// Solves m z = v for an invertible 2x2 matrix.
Vec Solve(const Matrix& m, std::span<const Rational> v) {
  Rational det = Det(m);
  if (det == 0) Fail(ErrorKind::kInternalInconsistency, "singular 2x2 system");
  return {(m(1, 1) * v[0] - m(0, 1) * v[1]) / det,
          (m(0, 0) * v[1] - m(1, 0) * v[0]) / det};
}

Rational Form(const Matrix& m, std::span<const Rational> v) {
  return Dot(v, m.Apply(v));
}

Vec Perp(std::span<const Rational> v) { return {-v[1], v[0]}; }

std::optional<Rational> RationalSqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  QuadraticSurd root = QuadraticSurd::Sqrt(x);
  if (!root.IsRational()) return std::nullopt;
  return root.AsRational();
}

// First nonzero entry positive.
Vec Oriented(Vec v) {
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0) v = Negate(v);
      break;
    }
  }
  return v;
}

SurdVec ApplySurd(const Matrix& m, std::span<const QuadraticSurd> x) {
  SurdVec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[r] = out[r] + x[c] * QuadraticSurd(m(r, c));
    }
  }
  return out;
}

SurdVec ApplyTransposedSurd(const Matrix& m, std::span<const QuadraticSurd> y) {
  SurdVec out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[c] = out[c] + y[r] * QuadraticSurd(m(r, c));
    }
  }
  return out;
}

void CheckQuadratic(const QuadraticConic& q) {
  if (q.Q.rows() != 2 || q.Q.cols() != 2 || q.d.size() != 2) {
    Fail(ErrorKind::kMalformedInput, "quadratic conic needs a 2x2 Q and 2-vector d");
  }
  if (q.Q(0, 1) != q.Q(1, 0)) {
    Fail(ErrorKind::kMalformedInput, "Q must be symmetric");
  }
}

// The region as { 1/2 x^T Q x + d^T x + s >= 0 }.
QuadraticConic GreaterEqualForm(const QuadraticConic& q) {
  QuadraticConic out = q;
  if (q.sense == RegionSense::kLessEqual) {
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) out.Q(r, c) = -q.Q(r, c);
    }
    out.d = Negate(q.d);
    out.s = -q.s;
    out.sense = RegionSense::kGreaterEqual;
  }
  return out;
}

Rational EvalQuadratic(const QuadraticConic& q, std::span<const Rational> x) {
  return Form(q.Q, x) / 2 + Dot(q.d, x) + q.s;
}

// All rows scaled by one positive factor to a primitive integer matrix.
Rational IntegerRowScale(const Matrix& A) {
  Vec all;
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) all.push_back(A(r, c));
  }
  return 1 / PrimitiveScale(all);
}

Matrix ScaleMatrix(const Rational& f, const Matrix& A) {
  Matrix out = A;
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) out(r, c) = f * A(r, c);
  }
  return out;
}

}  // namespace

ConicKind ClassifyConic(const QuadraticConic& q) {
  CheckQuadratic(q);
  Rational det = Det(q.Q);
  bool q_zero = q.Q(0, 0) == 0 && q.Q(0, 1) == 0 && q.Q(1, 1) == 0;
  if (q_zero) {
    if (IsZero(q.d)) Fail(ErrorKind::kDegenerate, "Q = 0 and d = 0: no conic");
    return ConicKind::kHalfSpace;
  }
  if (det < 0) return ConicKind::kHyperbolaBranch;
  if (det > 0) return ConicKind::kEllipse;
  return ConicKind::kParabola;
}

CanonicalHyperbolaForm CanonicalHyperbola(const QuadraticConic& input) {
  if (ClassifyConic(input) != ConicKind::kHyperbolaBranch) {
    Fail(ErrorKind::kDomain, "conic is not a hyperbola");
  }
  QuadraticConic q = GreaterEqualForm(input);
  const Rational a = q.Q(0, 0), b = q.Q(0, 1), c = q.Q(1, 1);
  std::array<Vec, 2> u;
  std::array<Rational, 2> lambda;
  if (b == 0) {
    if (a > 0) {
      u = {Vec{1, 0}, Vec{0, 1}};
      lambda = {a, c};
    } else {
      u = {Vec{0, 1}, Vec{1, 0}};
      lambda = {c, a};
    }
  } else {
    auto root = RationalSqrt((a - c) * (a - c) + 4 * b * b);
    if (!root) {
      Fail(ErrorKind::kUnsupported,
           "unsupported-rotation: the eigenvectors of Q are irrational");
    }
    lambda = {(a + c + *root) / 2, (a + c - *root) / 2};
    for (int k = 0; k < 2; ++k) u[k] = Oriented(Primitive(Vec{b, lambda[k] - a}));
  }

  std::array<Rational, 2> coef, centre;
  Rational c0 = q.s;
  for (int k = 0; k < 2; ++k) {
    Rational norm2 = Dot(u[k], u[k]);
    coef[k] = lambda[k] * norm2 / 2;
    centre[k] = -Dot(q.d, u[k]) / (2 * coef[k]);
    c0 -= coef[k] * centre[k] * centre[k];
  }
  if (c0 == 0) {
    Fail(ErrorKind::kDegenerate, "degenerate hyperbola: eta = 0 (line pair)");
  }
  if (c0 > 0) {
    Fail(ErrorKind::kDomain,
         "the selected side of the hyperbola is the non-convex region between "
         "the branches");
  }
  auto beta2 = RationalSqrt(coef[0] * -coef[1]);
  auto eta = RationalSqrt(coef[0] * -c0);
  if (!beta2 || !eta) {
    Fail(ErrorKind::kUnsupported,
         "hyperbola has no rational SOC form (irrational square root)");
  }

  CanonicalHyperbolaForm out;
  out.V = Matrix::FromRows({Vec{u[0][0], u[1][0]}, Vec{u[0][1], u[1][1]}});
  out.beta1 = coef[0];
  out.beta2 = *beta2;
  out.alpha1 = centre[0];
  out.alpha2 = centre[1];
  out.eta = *eta;

  // Expand beta1^2 (t1 - alpha1)^2 - beta2^2 (t2 - alpha2)^2 - eta^2 in x and
  // compare with beta1 times the input quadratic, coefficient by coefficient.
  Matrix quad(2, 2);
  Vec lin(2);
  Rational cst = -out.eta * out.eta;
  const std::array<Rational, 2> weight = {out.beta1 * out.beta1,
                                          -out.beta2 * out.beta2};
  const std::array<Rational, 2> shift = {out.alpha1, out.alpha2};
  for (int k = 0; k < 2; ++k) {
    Rational n2 = Dot(u[k], u[k]);
    Rational w = weight[k] / (n2 * n2);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t s = 0; s < 2; ++s) quad(r, s) += w * u[k][r] * u[k][s];
      lin[r] -= 2 * weight[k] * shift[k] / n2 * u[k][r];
    }
    cst += weight[k] * shift[k] * shift[k];
  }
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t s = 0; s < 2; ++s) {
      if (quad(r, s) != out.beta1 * q.Q(r, s) / 2) {
        Fail(ErrorKind::kInternalInconsistency, "canonical form mismatch (Q)");
      }
    }
    if (lin[r] != out.beta1 * q.d[r]) {
      Fail(ErrorKind::kInternalInconsistency, "canonical form mismatch (d)");
    }
  }
  if (cst != out.beta1 * q.s) {
    Fail(ErrorKind::kInternalInconsistency, "canonical form mismatch (s)");
  }
  return out;
}

ConicBlock2D ConicBlock2D::FromSoc(Matrix A, Vec b) {
  Validate(ConicConstraint{A, b});
  if (A.cols() != 2) {
    Fail(ErrorKind::kMalformedInput, "planar conic blocks need 2 columns");
  }
  ConicBlock2D block;
  block.A_ = std::move(A);
  block.b_ = std::move(b);
  const Matrix& Am = block.A_;
  const Vec& bv = block.b_;
  const std::size_t m = Am.rows();
  const Vec a = Am.Row(m - 1);
  const Rational& bm = bv[m - 1];

  bool rest_zero = true;
  for (std::size_t r = 0; r + 1 < m; ++r) {
    if (!IsZero(Am.Row(r))) rest_zero = false;
  }
  Rational rr = 0;
  Rational r_l1 = 0;
  for (std::size_t r = 0; r + 1 < m; ++r) {
    rr += bv[r] * bv[r];
    r_l1 += abs(bv[r]);
  }

  if (rest_zero) {
    if (IsZero(a)) {
      Fail(ErrorKind::kDegenerate, "conic block with A = 0 constrains nothing");
    }
    block.kind_ = ConicKind::kHalfSpace;
    block.rec_normals_ = {a};
    block.interior_point_ = Scale((bm + r_l1 + 1) / Dot(a, a), a);
    return block;
  }

  // phi(x) = ||R x - r||^2 - (a^T x - b_m)^2 = x^T M x - 2 g^T x + k0.
  Matrix M(2, 2);
  Vec g(2);
  for (std::size_t r = 0; r + 1 < m; ++r) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) M(i, j) += Am(r, i) * Am(r, j);
      g[i] += Am(r, i) * bv[r];
    }
  }
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) M(i, j) -= a[i] * a[j];
    g[i] -= bm * a[i];
  }
  block.M_ = M;
  block.g_ = g;
  block.k0_ = rr - bm * bm;
  const Rational det = Det(M);
  auto ell = [&](std::span<const Rational> x) -> Rational { return Dot(a, x) - bm; };

  if (det > 0 && M(0, 0) > 0) {
    block.kind_ = ConicKind::kEllipse;
    block.center_ = Solve(M, g);
    block.qc_ = block.k0_ - Dot(g, block.center_);
    if (block.qc_ >= 0 || ell(block.center_) <= 0) {
      Fail(ErrorKind::kDegenerate, "ellipse block has empty interior");
    }
    block.interior_point_ = block.center_;
    block.rec_normals_ = {Vec{1, 0}, Vec{-1, 0}, Vec{0, 1}, Vec{0, -1}};
    return block;
  }

  if (det < 0) {
    if (m != 3 || !IsZero(Am.Row(0))) {
      Fail(ErrorKind::kUnsupported,
           "hyperbola block must be 3x2 with a zero first row");
    }
    if (bv[0] == 0) {
      Fail(ErrorKind::kDegenerate, "degenerate hyperbola: eta = b_1 = 0");
    }
    block.kind_ = ConicKind::kHyperbolaBranch;
    Vec t_row = Am.Row(1), s_row = Am.Row(2);
    block.rec_normals_ = {Add(t_row, s_row), Sub(s_row, t_row)};
    Matrix G = Matrix::FromRows({t_row, s_row});
    block.interior_point_ = Solve(G, Vec{bv[1], abs(bv[0]) + 1 + bv[2]});
    return block;
  }

  if (det == 0 && M(0, 0) + M(1, 1) > 0) {
    block.kind_ = ConicKind::kParabola;
    Vec n = M(0, 0) != 0 ? Vec{M(0, 0), M(0, 1)} : Vec{M(0, 1), M(1, 1)};
    n = Oriented(Primitive(n));
    block.axis_ = n;
    block.kappa_ = n[0] != 0 ? M(0, 0) / (n[0] * n[0]) : M(1, 1) / (n[1] * n[1]);
    Vec d = Perp(n);
    Rational gd = Dot(g, d);
    if (gd == 0) {
      Fail(ErrorKind::kUnsupported,
           "degenerate parabola block (pair of parallel lines)");
    }
    if (gd < 0) {
      d = Negate(d);
      gd = -gd;
    }
    block.direction_ = d;
    Rational t = block.k0_ / (2 * gd) + 1;
    Rational ad = Dot(a, d);
    if (ad > 0) t = std::max(t, Rational((bm + 1) / ad));
    block.interior_point_ = Scale(t, d);
    if (ell(block.interior_point_) <= 0) {
      Fail(ErrorKind::kDegenerate, "parabola block has empty interior");
    }
    Vec dp = Perp(d);
    block.rec_normals_ = {dp, Negate(dp), d};
    return block;
  }

  Fail(ErrorKind::kUnsupported,
       "conic block is not a half-space, ellipse, parabola or hyperbola branch");
}

bool ConicBlock2D::Contains(std::span<const Rational> x) const {
  return constraint().Contains(x);
}

bool ConicBlock2D::Contains(std::span<const QuadraticSurd> x) const {
  return constraint().Contains(x);
}

bool ConicBlock2D::ContainsStrictly(std::span<const Rational> x) const {
  return constraint().ContainsStrictly(x);
}

QuadraticSurd ConicBlock2D::halfspace_threshold() const {
  if (kind_ != ConicKind::kHalfSpace) {
    Fail(ErrorKind::kDomain, "block is not a half-space");
  }
  Rational rr = 0;
  for (std::size_t r = 0; r + 1 < b_.size(); ++r) rr += b_[r] * b_[r];
  return QuadraticSurd::Sqrt(rr) + QuadraticSurd(b_.back());
}

ConicBlock2D HyperbolaToSoc(const QuadraticConic& input) {
  CanonicalHyperbolaForm form = CanonicalHyperbola(input);
  const QuadraticConic q = GreaterEqualForm(input);
  const Vec u1 = form.V.Column(0), u2 = form.V.Column(1);
  const Rational n1 = Dot(u1, u1), n2 = Dot(u2, u2);

  int branch = input.branch == BranchSelector::kPositive ? 1 : -1;
  if (input.interior_point) {
    const Vec& p = *input.interior_point;
    if (p.size() != 2) Fail(ErrorKind::kMalformedInput, "interior point must be 2D");
    if (EvalQuadratic(q, p) <= 0) {
      Fail(ErrorKind::kDomain,
           "branch selector point " + ToString(std::span<const Rational>(p)) +
               " is not interior to the hyperbola region");
    }
    branch = Sign(Dot(u1, p) / n1 - form.alpha1);
  }

  Vec t_row = Scale(form.beta2 / n2, u2);
  Vec s_row = Scale(form.beta1 / n1, u1);
  Rational bt = form.beta2 * form.alpha2;
  Rational bs = form.beta1 * form.alpha1;
  if (branch < 0) {
    t_row = Negate(t_row);
    s_row = Negate(s_row);
    bt = -bt;
    bs = -bs;
  }
  Matrix A = Matrix::FromRows({Vec{0, 0}, t_row, s_row});
  Rational sigma = IntegerRowScale(A);
  Vec b = Scale(sigma, Vec{-form.eta, bt, bs});
  ConicBlock2D block = ConicBlock2D::FromSoc(ScaleMatrix(sigma, A), b);
  block.row_scaling_ = sigma;

  // Vertex (k = 1) and two further rational boundary points of the branch.
  for (const Rational& k : {Rational(1), Rational(2), MakeRational(1, 3)}) {
    Rational y1 = branch * form.eta * (k + 1 / k) / 2 / form.beta1 + form.alpha1;
    Rational y2 = form.eta * (k - 1 / k) / 2 / form.beta2 + form.alpha2;
    Vec x = Add(Scale(y1, u1), Scale(y2, u2));
    Vec res = block.constraint().Residual(x);
    if (EvalQuadratic(q, x) != 0 || !SocContains(res) ||
        res[0] * res[0] + res[1] * res[1] != res[2] * res[2]) {
      Fail(ErrorKind::kInternalInconsistency,
           "SOC form does not reproduce the hyperbola at " +
               ToString(std::span<const Rational>(x)));
    }
  }
  return block;
}

ConicBlock2D ToBlock(const QuadraticConic& input) {
  ConicKind kind = ClassifyConic(input);
  if (kind == ConicKind::kHyperbolaBranch) return HyperbolaToSoc(input);
  // Convex regions below are { h(x) <= 0 }.
  QuadraticConic h = GreaterEqualForm(input);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) h.Q(r, c) = -h.Q(r, c);
  }
  h.d = Negate(h.d);
  h.s = -h.s;

  Matrix A;
  Vec b;
  if (kind == ConicKind::kHalfSpace) {
    // -d^T x - s >= 0.
    A = Matrix::FromRows({Vec{0, 0}, Negate(h.d)});
    b = Vec{0, h.s};
  } else if (kind == ConicKind::kEllipse) {
    const Rational p = h.Q(0, 0), qq = h.Q(0, 1);
    if (p <= 0) Fail(ErrorKind::kDomain, "selected side of the ellipse is not convex");
    Vec centre = Negate(Solve(h.Q, h.d));
    Rational hc = EvalQuadratic(h, centre);
    if (hc >= 0) Fail(ErrorKind::kDegenerate, "ellipse region has empty interior");
    // p * h(x) = 1/2 [(p w1)^2 + det w2^2] + p hc with
    // w = (x1 - c1 + q/p (x2 - c2), x2 - c2).
    auto delta = RationalSqrt(Det(h.Q));
    auto rho = RationalSqrt(-2 * p * hc);
    if (!delta || !rho) {
      Fail(ErrorKind::kUnsupported,
           "ellipse has no rational SOC form; supply the block as SOC data");
    }
    A = Matrix::FromRows({Vec{p, qq}, Vec{0, *delta}, Vec{0, 0}});
    b = Vec{p * centre[0] + qq * centre[1], *delta * centre[1], -*rho};
  } else {
    if (h.Q(0, 0) + h.Q(1, 1) <= 0) {
      Fail(ErrorKind::kDomain, "selected side of the parabola is not convex");
    }
    Vec n = h.Q(0, 0) != 0 ? Vec{h.Q(0, 0), h.Q(0, 1)} : Vec{h.Q(0, 1), h.Q(1, 1)};
    n = Oriented(Primitive(n));
    Rational lam = n[0] != 0 ? h.Q(0, 0) / (n[0] * n[0]) : h.Q(1, 1) / (n[1] * n[1]);
    Rational kappa = lam / 2;
    // kappa (n^T x)^2 <= L(x) = -(d^T x + s) written as
    // ||(n^T x, (L/kappa - 1)/2)|| <= (L/kappa + 1)/2.
    Vec row = Scale(-1 / (2 * kappa), h.d);
    A = Matrix::FromRows({n, row, row});
    b = Vec{0, (h.s / kappa + 1) / 2, (h.s / kappa - 1) / 2};
  }
  Rational sigma = IntegerRowScale(A);
  ConicBlock2D block = ConicBlock2D::FromSoc(ScaleMatrix(sigma, A), Scale(sigma, b));
  block.row_scaling_ = sigma;
  if (block.kind() != kind) {
    Fail(ErrorKind::kInternalInconsistency, "conversion changed the conic kind");
  }
  return block;
}

namespace {

void RequireHyperbola(const ConicBlock2D& block) {
  if (block.kind() != ConicKind::kHyperbolaBranch) {
    Fail(ErrorKind::kDomain,
         std::string("operation needs a hyperbola branch, block is ") +
             std::string(ToString(block.kind())));
  }
}

Line2D PrimitiveLine(const Vec& normal, const Rational& rhs) {
  Rational tau = PrimitiveScale(normal);
  return {Scale(1 / tau, normal), rhs / tau, true};
}

}  // namespace

std::pair<Line2D, Line2D> Asymptotes(const ConicBlock2D& block) {
  RequireHyperbola(block);
  const Matrix& A = block.A();
  const Vec& b = block.b();
  Vec t_row = A.Row(1), s_row = A.Row(2);
  return {PrimitiveLine(Add(t_row, s_row), b[1] + b[2]),
          PrimitiveLine(Sub(s_row, t_row), b[2] - b[1])};
}

std::pair<CutInequality, CutInequality> HyperbolaCuts(const ConicBlock2D& block) {
  RequireHyperbola(block);
  auto one = [&](const Vec& u, const char* label) {
    Vec coeffs = block.A().ApplyTransposed(u);
    if (IsZero(coeffs)) {
      Fail(ErrorKind::kDegenerate, "asymptote normal is zero; tau undefined");
    }
    Rational tau = PrimitiveScale(coeffs);
    CutInequality cut = SplitAndProjectCut(GammaFunction(Scale(1 / tau, u), 1),
                                           block.A(), block.b());
    cut.derivation.generator = "hyperbola_asymptote";
    cut.derivation.tau = tau;
    cut.derivation.params["asymptote"] = label;
    cut.derivation.params["gamma_rhs"] = Rational(Dot(Scale(1 / tau, u), block.b())).get_str();
    return cut;
  };
  return {one(Vec{0, 1, 1}, "1"), one(Vec{0, -1, 1}, "2")};
}

SupportResult SupportMinimize(const ConicBlock2D& block,
                              std::span<const Rational> pi) {
  if (pi.size() != 2) Fail(ErrorKind::kMalformedInput, "objective must be 2D");
  if (IsZero(pi)) Fail(ErrorKind::kDomain, "objective pi = 0");
  const Matrix& A = block.A();
  const Vec& b = block.b();
  const std::size_t m = A.rows();
  const Vec p(pi.begin(), pi.end());
  SupportResult out;

  // Dual weight y = mu (-z, l) proportional to the outward normal at a
  // boundary minimizer, scaled so that A^T y = pi.
  auto certify_at = [&](const SurdVec& x) {
    SurdVec res = ApplySurd(A, x);
    for (std::size_t r = 0; r < m; ++r) res[r] = res[r] - QuadraticSurd(b[r]);
    SurdVec y(m);
    for (std::size_t r = 0; r + 1 < m; ++r) y[r] = -res[r];
    y[m - 1] = res[m - 1];
    SurdVec grad = ApplyTransposedSurd(A, y);
    std::size_t k = p[0] != 0 ? 0 : 1;
    if (grad[k].Sign() == 0) {
      Fail(ErrorKind::kInternalInconsistency, "support certificate is degenerate");
    }
    QuadraticSurd mu = QuadraticSurd(p[k]) / grad[k];
    for (auto& v : y) v = v * mu;
    out.certificate = y;
  };

  switch (block.kind()) {
    case ConicKind::kHalfSpace: {
      Vec a = block.halfspace_normal();
      if (p[0] * a[1] - p[1] * a[0] != 0 || Dot(p, a) <= 0) return out;
      Rational lam = Dot(p, a) / Dot(a, a);
      QuadraticSurd theta = block.halfspace_threshold();
      out.bounded = true;
      out.attained = true;
      out.value = theta * QuadraticSurd(lam);
      QuadraticSurd along = theta / QuadraticSurd(Dot(a, a));
      out.minimizer = SurdVec{along * QuadraticSurd(a[0]), along * QuadraticSurd(a[1])};
      Rational rr = 0;
      for (std::size_t r = 0; r + 1 < m; ++r) rr += b[r] * b[r];
      SurdVec y(m);
      if (rr != 0) {
        QuadraticSurd norm = QuadraticSurd::Sqrt(rr);
        for (std::size_t r = 0; r + 1 < m; ++r) {
          y[r] = norm * QuadraticSurd(lam * b[r] / rr);
        }
      }
      y[m - 1] = QuadraticSurd(lam);
      out.certificate = y;
      return out;
    }
    case ConicKind::kEllipse: {
      Vec w = Solve(block.M_, p);
      Rational quad = Dot(p, w);
      QuadraticSurd root = QuadraticSurd::Sqrt(-block.qc_ * quad);
      out.bounded = true;
      out.attained = true;
      out.value = QuadraticSurd(Dot(p, block.center_)) - root;
      QuadraticSurd step = root / QuadraticSurd(quad);
      SurdVec x(2);
      for (std::size_t i = 0; i < 2; ++i) {
        x[i] = QuadraticSurd(block.center_[i]) - step * QuadraticSurd(w[i]);
      }
      out.minimizer = x;
      certify_at(x);
      return out;
    }
    case ConicKind::kParabola: {
      const Vec& n = block.axis_;
      const Vec& d = block.direction_;
      Rational pd = Dot(p, d);
      if (pd <= 0) return out;
      // x = alpha n + beta d with beta >= h(alpha).
      Rational nn = Dot(n, n);
      Rational gd = Dot(block.g_, d);
      Rational gn = Dot(block.g_, n);
      Rational c2 = pd * block.kappa_ * nn * nn / (2 * gd);
      Rational c1 = Dot(p, n) - pd * gn / gd;
      Rational c0 = pd * block.k0_ / (2 * gd);
      Rational alpha = -c1 / (2 * c2);
      Rational beta = (block.kappa_ * nn * nn * alpha * alpha - 2 * alpha * gn + block.k0_) /
                      (2 * gd);
      Vec x = Add(Scale(alpha, n), Scale(beta, d));
      out.bounded = true;
      out.attained = true;
      out.value = QuadraticSurd(c0 - c1 * c1 / (4 * c2));
      if (out.value != QuadraticSurd(Dot(p, x))) {
        Fail(ErrorKind::kInternalInconsistency, "parabola minimizer mismatch");
      }
      out.minimizer = ToSurds(x);
      certify_at(*out.minimizer);
      return out;
    }
    case ConicKind::kHyperbolaBranch: {
      Matrix G = Matrix::FromRows({A.Row(1), A.Row(2)});
      // (c_t, c_s) = pi^T G^{-1}.
      Matrix Gt = Matrix::FromRows({G.Column(0), G.Column(1)});
      Vec cts = Solve(Gt, p);
      const Rational& ct = cts[0];
      const Rational& cs = cts[1];
      if (cs < abs(ct)) return out;
      Rational base = ct * b[1] + cs * b[2];
      Rational eta = abs(b[0]);
      out.bounded = true;
      if (cs == abs(ct)) {
        out.value = QuadraticSurd(base);
        out.attained = false;
        out.certificate = SurdVec{0, ct, cs};
        return out;
      }
      QuadraticSurd root = QuadraticSurd::Sqrt(cs * cs - ct * ct);
      out.attained = true;
      out.value = QuadraticSurd(base) + root * QuadraticSurd(eta);
      QuadraticSurd t = QuadraticSurd(Rational(-ct * eta)) / root;
      QuadraticSurd s = QuadraticSurd(cs * eta) / root;
      // x = G^{-1} (t + b_2, s + b_3).
      Rational det = Det(G);
      QuadraticSurd u0 = t + QuadraticSurd(b[1]);
      QuadraticSurd u1 = s + QuadraticSurd(b[2]);
      out.minimizer = SurdVec{
          (u0 * QuadraticSurd(G(1, 1)) - u1 * QuadraticSurd(G(0, 1))) / QuadraticSurd(det),
          (u1 * QuadraticSurd(G(0, 0)) - u0 * QuadraticSurd(G(1, 0))) / QuadraticSurd(det)};
      out.certificate = SurdVec{root * QuadraticSurd(Rational(Sign(b[0]))), ct, cs};
      return out;
    }
  }
  return out;
}

}  // namespace soccuts
