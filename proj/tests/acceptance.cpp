// One PASS/FAIL line per acceptance criterion; exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "axis_points.hpp"
#include "oracles.hpp"
#include "soccuts/commands.hpp"
#include "soccuts/errors.hpp"
#include "soccuts/theorem2d.hpp"

using namespace soccuts;
using namespace soccuts::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

Instance Load(const std::string& name) {
  return LoadInstance(std::filesystem::path(SOCCUTS_CORPUS_DIR) / (name + ".json"));
}

CutInequality Cut(long a, long b, long rhs) {
  return CutInequality{Vec{Rational(a), Rational(b)}, Rational(rhs)};
}

bool SameCut(const Json& c, const CutInequality& want) {
  Vec pi{RationalFromJson(c["pi"][0]), RationalFromJson(c["pi"][1])};
  return pi == want.pi && RationalFromJson(c["pi0"]) == want.pi0;
}

Json TPrimeDoc() {
  return Json::parse(R"({"schema_version": 1, "name": "eq3",
    "blocks": [{"type": "soc", "A": [[0, 0], [1, -1], [1, 1]], "b": [-2, 0, 0]}]})");
}

Outcome HyperbolaCutsExample() {
  Outcome o;
  auto start = Clock::now();
  CommandResult r = CmdCuts(ParseInstance(TPrimeDoc()), CommandOptions{});
  double t = Seconds(start);
  const Json& cuts = r.report["cuts"];
  o.Require(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
  o.Require(cuts.size() == 2, "emitted " + std::to_string(cuts.size()) + " cuts");
  if (cuts.size() == 2) {
    o.Require(SameCut(cuts[0], Cut(1, 0, 1)), "first cut is " + cuts[0]["text"].get<std::string>());
    o.Require(SameCut(cuts[1], Cut(0, 1, 1)), "second cut is " + cuts[1]["text"].get<std::string>());
  }
  o.Require(r.report["all_valid"].get<bool>(), "oracle violation");
  o.Require(t < 1.0, "runtime " + std::to_string(t) + " s");
  if (o.pass) o.detail = "x1 >= 1, x2 >= 1 in " + std::to_string(t) + " s";
  return o;
}

Outcome WorkedExample() {
  Outcome o;
  Vec gamma{Rational(0), MakeRational(1, 2), MakeRational(1, 2)};
  Vec col1{Rational(0), Rational(1), Rational(1)};
  Vec col2{Rational(0), Rational(-1), Rational(1)};
  Vec b{Rational(-2), Rational(0), Rational(0)};
  Rational f1 = EvalFGamma(gamma, 1, col1), f2 = EvalFGamma(gamma, 1, col2);
  Rational fb = EvalFGamma(gamma, 1, b);
  o.Require(f1 == 1 && f2 == 0 && fb == 1, "got (" + ToString(f1) + ", " + ToString(f2) +
                                                "; rhs " + ToString(fb) + ")");
  CutInequality cut = MakeCut(GammaFunction(gamma, 1),
                              Matrix::FromRows({Vec{0, 0}, Vec{1, -1}, Vec{1, 1}}), b);
  o.Require(cut.SameInequality(Cut(1, 0, 1)), "MakeCut gave " + cut.ToString());
  if (o.pass) o.detail = "(1, 0; rhs 1), x1 >= 1";
  return o;
}

Outcome PropertySuites() {
  Outcome o;
  auto start = Clock::now();
  const std::vector<std::pair<std::vector<const char*>, int>> configs = {
      {{"0", "1/2", "1/2"}, 1},       {{"0", "1", "1"}, 1},          {{"0", "3", "3"}, 1},
      {{"1/3", "1/2", "1"}, 1},       {{"1/3", "1/2", "1"}, 2},      {{"-2/5", "1/5", "3/5"}, 1},
      {{"-2/5", "1/5", "3/5"}, 2},    {{"1/2", "0", "1/2"}, 2},      {{"1", "-1", "2"}, 1},
      {{"3/7", "-2/7", "5/7"}, 2},    {{"0", "1"}, 1},               {{"-1/2", "1"}, 1},
      {{"0", "0", "1/2", "1/2"}, 1},  {{"1/4", "1/4", "1/4", "1"}, 3}, {{"1", "-1", "1", "3"}, 2},
      {{"0", "1/3", "0", "1/2"}, 1},  {{"1", "1", "1", "1", "5"}, 4}, {{"2/3", "0", "-1/3", "1"}, 3},
      {{"1/5", "2/5", "-1/5", "1/5", "1"}, 2}, {{"5/2", "5/2", "6"}, 2}, {{"3", "-4", "8"}, 1},
  };
  std::size_t pairs = 0, violations = 0;
  for (const auto& [g, j] : configs) {
    CommandOptions opt;
    opt.samples = 10000;
    opt.seed = 20 + j;
    Vec gamma;
    for (const char* e : g) gamma.push_back(ParseRational(e));
    CommandResult r = CmdCheckFunction(gamma, j, opt);
    if (!r.report.value("admissible", false)) {
      o.Require(false, "inadmissible configuration " + r.report["gamma"].dump());
      continue;
    }
    for (const char* prop : {"subadditivity", "monotonicity"}) {
      pairs += r.report[prop]["checked"].get<std::size_t>();
      violations += r.report[prop]["violations"].get<std::size_t>();
    }
    o.Require(r.report["zero_at_origin"].get<bool>(), "f(0) != 0");
  }
  o.Require(violations == 0, std::to_string(violations) + " violations");
  o.Require(pairs >= 2 * 20 * 10000, "only " + std::to_string(pairs) + " pairs");

  Vec gamma = ParseVec({"0", "1", "1"});
  Vec u = ParseVec({"0", "0", "1"}), v = ParseVec({"-1", "0", "1"});
  Rational fu = EvalFGamma(gamma, 1, u), fv = EvalFGamma(gamma, 1, v);
  o.Require(fu == 1 && fv == 2, "orthant pair gave f(u)=" + ToString(fu) + ", f(v)=" + ToString(fv));
  double t = Seconds(start);
  o.Require(t < 30.0, "runtime " + std::to_string(t) + " s");
  if (o.pass) {
    o.detail = std::to_string(configs.size()) + " configurations, " + std::to_string(pairs) +
               " pairs, 0 violations; f(u)=1 < 2=f(v); " + std::to_string(t) + " s";
  }
  return o;
}

Outcome OracleValidity() {
  Outcome o;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(SOCCUTS_CORPUS_DIR)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  o.Require(files.size() >= 10, "corpus has " + std::to_string(files.size()) + " instances");
  std::size_t total = 0;
  for (const auto& f : files) {
    Instance inst = LoadInstance(f);
    CommandResult r = CmdCuts(inst, CommandOptions{});
    total += r.report["cuts"].size();
    o.Require(r.report["all_valid"].get<bool>(), inst.name + " has an invalid cut");
    CommandResult h = CmdHull(inst, CommandOptions{});
    o.Require(h.report["all_valid"].get<bool>(), inst.name + " hull facet invalid");
  }
  if (o.pass) {
    o.detail = std::to_string(files.size()) + " instances, " + std::to_string(total) +
               " cuts, all valid on [-100,100]^2";
  }
  return o;
}

Outcome DiscOuterApprox() {
  Outcome o;
  ConicSet2D disc = Load("disc_3_4").Set();
  OuterApproximation res = OuterApproxBounded(disc, Vec{1, 0}, 0);
  o.Require(res.pruned.has_value(), "no pruned polyhedron");
  if (!res.pruned) return o;
  const auto& q = *res.pruned;
  o.Require(q.size() <= 4, "p = " + std::to_string(q.size()));
  for (const auto& c : q) {
    auto it = c.derivation.params.find("p_bound");
    o.Require(it != c.derivation.params.end() && it->second == "4", "p_bound not recorded as 4");
  }
  std::vector<Vec> pts;
  for (long x = -6; x <= 6; ++x) {
    for (long y = -6; y <= 6; ++y) {
      Vec p{x, y};
      if (Contains(q, p) && x <= 0) pts.push_back(p);
    }
  }
  Polyhedron2D hull = ConvexHull(pts);
  bool facet = false;
  for (const auto& c : hull.inequalities) facet = facet || c.SameInequality(Cut(1, 0, 0));
  o.Require(facet, "x1 >= 0 is not a facet of the windowed hull");
  if (o.pass) o.detail = "p = " + std::to_string(q.size()) + " <= 2^2, facet x1 >= 0";
  return o;
}

Outcome AxisPoints() {
  Outcome o;
  ConicConstraint t = HyperbolaT();
  auto all = BoundedApproximations(ConicSet2D({ConicBlock2D::FromSoc(t.A, t.b)}));
  for (auto& p : RandomApproximations(500, 17)) all.push_back(p);
  Integer largest = 0;
  for (const auto& p : all) {
    bool valid = p.rows.size() <= 8;
    for (const auto& c : p.rows) valid = valid && ValidForTPrime(c);
    o.Require(valid, p.origin + " is not an outer approximation");
    for (int axis = 0; axis < 2; ++axis) {
      Integer k = AxisThreshold(p.rows, axis);
      if (k > largest) largest = k;
      Vec z = AxisPoint(axis, k);
      o.Require(k <= 1'000'000 && Contains(p.rows, z), p.origin + " misses its axis point");
      o.Require(!Cut(axis == 0 ? 0 : 1, axis == 0 ? 1 : 0, 1).IsSatisfiedBy(z),
                "axis point satisfies x1 >= 1, x2 >= 1");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(all.size()) + " polyhedra, axis points found (largest k = " +
               largest.get_str() + ")";
  }
  return o;
}

Outcome EmptyCertificates() {
  Outcome o;
  std::string detail;
  for (const char* name : {"band", "disc_2_5"}) {
    auto start = Clock::now();
    Instance inst = Load(name);
    CommandResult r = CmdCertify(inst, CommandOptions{});
    double t = Seconds(start);
    const Json& cert = r.report["certificate"];
    o.Require(cert["result"] == "Empty", std::string(name) + " not Empty");
    o.Require(cert["cuts"].size() == 2, std::string(name) + " cut count");
    if (cert["cuts"].size() == 2) {
      for (const auto& c : cert["cuts"]) {
        o.Require(c["oracle"]["valid"].get<bool>(), std::string(name) + " oracle");
      }
      Certificate direct = CertifyEmpty(inst.Set());
      o.Require(direct.cuts.size() == 2 &&
                    LinearlyInconsistent(direct.cuts[0], direct.cuts[1]),
                std::string(name) + " cuts are consistent");
    }
    o.Require(t < 5.0, std::string(name) + " runtime " + std::to_string(t));
    detail += std::string(detail.empty() ? "" : ", ") + name + " " + std::to_string(t) + " s";
  }
  if (o.pass) o.detail = "2 inconsistent cuts each; " + detail;
  return o;
}

Outcome Faces() {
  Outcome o;
  struct Case {
    const char* instance;
    CutInequality face;
    Pathway pathway;
    const char* alpha;
    bool facet;
  };
  const Case cases[] = {
      {"t_prime", Cut(1, 0, 1), Pathway::kHyperbolaCut, nullptr, true},
      {"t_prime_diagonal", Cut(1, 1, 2), Pathway::kBoundedOuterApprox, nullptr, false},
      {"parabola_halfplane", Cut(1, 0, 3), Pathway::kHalfSpaceRounding, "7/3", true},
  };
  for (const auto& c : cases) {
    Instance inst = Load(c.instance);
    inst.query.pi = c.face.pi;
    inst.query.pi0 = c.face.pi0.get_num();
    Certificate cert = DeriveFace(inst.Set(), c.face.pi, c.face.pi0.get_num());
    std::string tag = c.face.ToString();
    o.Require(cert.kind == CertificateKind::kFace && cert.cuts.size() == 1 &&
                  cert.cuts[0].SameInequality(c.face),
              tag + " not derived");
    o.Require(!cert.pathways.empty() && cert.pathways[0].kind == c.pathway,
              tag + " pathway mismatch");
    if (c.alpha) {
      o.Require(!cert.pathways.empty() && cert.pathways[0].alpha &&
                    *cert.pathways[0].alpha == QuadraticSurd(ParseRational(c.alpha)),
                tag + " alpha mismatch");
    }
    CommandResult r = CmdFace(inst, CommandOptions{});
    const Json& h = r.report["hull_oracle"];
    o.Require(RationalFromJson(h["support"]) == c.face.pi0, tag + " differs from hull support");
    o.Require(h["tight_points"].get<std::size_t>() > 0, tag + " not attained");
    if (c.facet) o.Require(h["facet"].get<bool>(), tag + " is not a hull facet");
  }
  if (o.pass) {
    o.detail = "x1 >= 1 HyperbolaCut, x1 + x2 >= 2 BoundedOuterApprox, "
               "x1 >= 3 HalfSpaceRounding (alpha 7/3)";
  }
  return o;
}

Outcome RoundTrip() {
  Outcome o;
  QuadraticConic q;
  q.Q = Matrix::FromRows({Vec{0, 1}, Vec{1, 0}});
  q.d = Vec{0, 0};
  q.s = -1;
  ConicBlock2D block = HyperbolaToSoc(q);
  Matrix A = Matrix::FromRows({Vec{0, 0}, Vec{1, -1}, Vec{1, 1}});
  Vec b{Rational(-2), Rational(0), Rational(0)};
  o.Require(block.A() == A && block.b() == b, "A, b differ");
  o.Require(block.row_scaling() == 2, "row scaling " + ToString(block.row_scaling()));
  auto [l1, l2] = Asymptotes(block);
  o.Require(l1.normal == Vec({1, 0}) && l1.rhs == 0, "first asymptote");
  o.Require(l2.normal == Vec({0, 1}) && l2.rhs == 0, "second asymptote");
  if (o.pass) o.detail = "normal form with row scaling 2, asymptotes x1 = 0 and x2 = 0";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"asymptote cuts", HyperbolaCutsExample},
      {"f_gamma worked example", WorkedExample},
      {"property suites", PropertySuites},
      {"oracle validity on the corpus", OracleValidity},
      {"outer approximation of the 3/4 disc", DiscOuterApprox},
      {"outer approximations of T' meet the axes", AxisPoints},
      {"empty certificates", EmptyCertificates},
      {"face derivations", Faces},
      {"hyperbola round trip", RoundTrip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
