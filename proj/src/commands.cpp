#include "soccuts/commands.hpp"

#include <random>
#include <sstream>

#include "soccuts/errors.hpp"

namespace soccuts {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational Next() {
    long num = std::uniform_int_distribution<long>(-12, 12)(rng_);
    long den = std::uniform_int_distribution<long>(1, 6)(rng_);
    return MakeRational(num, den);
  }
  Vec NextVec(std::size_t m) {
    Vec v(m);
    for (auto& x : v) x = Next();
    return v;
  }
  // l1 norm of the rest dominates the Euclidean norm.
  Vec NextCone(std::size_t m) {
    Vec v = NextVec(m);
    Rational l1 = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) l1 += abs(v[i]);
    v.back() = l1 + abs(Next());
    return v;
  }
  Vec NextOrthant(std::size_t m) {
    Vec v = NextVec(m);
    for (auto& x : v) x = abs(x);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

struct PairSuite {
  long checked = 0;
  long violations = 0;
  Json first = nullptr;

  void Record(bool ok, const Json& witness) {
    ++checked;
    if (ok) return;
    if (violations++ == 0) first = witness;
  }
  Json ToJson() const {
    return {{"checked", checked}, {"violations", violations}, {"first_counterexample", first}};
  }
};

Json Witness(const GammaFunction& f, const Vec& u, const Vec& v) {
  return {{"u", ToJson(u)}, {"v", ToJson(v)}, {"f_u", ToJson(f(u))}, {"f_v", ToJson(f(v))}};
}

Json Header(const char* command, const Instance& inst, const CommandOptions& options) {
  return {{"command", command},
          {"instance", inst.name},
          {"instance_hash", inst.hash},
          {"box", ToJson(options.box)}};
}

Json ErrorJson(const Error& e) {
  return {{"kind", std::string(ToString(e.kind()))}, {"message", e.what()}};
}

Json Diagnostics(const Instance& inst) {
  Json out = Json::array();
  for (const auto& d : inst.diagnostics) out.push_back(ToJson(d));
  return out;
}

// Worst exit code among the block conversion failures.
int DiagnosticsExit(const Instance& inst) {
  int code = 0;
  for (const auto& d : inst.diagnostics) code = std::max(code, ExitCodeFor(d.kind));
  return code;
}

CommandResult Failed(Json report, const Error& e) {
  report["error"] = ErrorJson(e);
  return {std::move(report), ExitCodeFor(e.kind())};
}

Json CertificateJson(const Certificate& cert, const std::vector<Vec>& points, bool& all_valid) {
  Json out = {{"result", std::string(ToString(cert.kind))},
              {"oracle_points", cert.oracle_points},
              {"box", ToJson(cert.box)}};
  Json cuts = Json::array();
  for (std::size_t i = 0; i < cert.cuts.size(); ++i) {
    OracleVerdict v = CheckCut(points, cert.cuts[i]);
    all_valid = all_valid && v.valid;
    Json c = ToJson(cert.cuts[i], v);
    if (i < cert.pathways.size()) c["pathway"] = ToJson(cert.pathways[i]);
    cuts.push_back(c);
  }
  out["cuts"] = cuts;
  out["diagnostics"] = cert.diagnostics;
  return out;
}

}  // namespace

CommandResult CmdCheckFunction(const Vec& gamma, int j, const CommandOptions& options) {
  Json report = {{"command", "check-function"},
                 {"gamma", ToJson(gamma)},
                 {"j", j},
                 {"samples", options.samples},
                 {"seed", options.seed}};
  if (gamma.size() < 2 || j < 1 || static_cast<std::size_t>(j) >= gamma.size()) {
    return Failed(report, Error(ErrorKind::kMalformedInput,
                                "need m >= 2 and 1 <= j <= m - 1"));
  }
  GammaDomain domain = ClassifyGamma(gamma, j);
  report["domain"] = std::string(ToString(domain));
  report["violated_conditions"] = GammaViolations(gamma, j);
  report["admissible"] = domain != GammaDomain::kInadmissible;
  if (domain == GammaDomain::kInadmissible) return {report, 1};

  const GammaFunction f(gamma, j);
  const std::size_t m = gamma.size();
  Sampler sampler(options.seed);
  PairSuite sub, mono;
  for (long k = 0; k < options.samples; ++k) {
    Vec u = sampler.NextVec(m), v = sampler.NextVec(m);
    Rational fuv = f(Add(u, v));
    Json w = Witness(f, u, v);
    w["f_u_plus_v"] = ToJson(fuv);
    sub.Record(fuv <= f(u) + f(v), w);
  }
  for (long k = 0; k < options.samples; ++k) {
    Vec v = sampler.NextVec(m);
    Vec u = Add(v, sampler.NextCone(m));
    mono.Record(f(u) >= f(v), Witness(f, u, v));
  }
  bool zero = f(Vec(m, Rational(0))) == 0;
  report["subadditivity"] = sub.ToJson();
  report["monotonicity"] = mono.ToJson();
  report["zero_at_origin"] = zero;
  bool pass = sub.violations == 0 && mono.violations == 0 && zero;
  report["all_pass"] = pass;

  if (options.orthant) {
    // Not a claimed property; reported for comparison only.
    PairSuite orth;
    if (gamma.back() > 0) {
      Vec u(m, Rational(0));
      u.back() = 1 / gamma.back();
      Vec v = u;
      v[j - 1] -= 1;
      orth.Record(f(u) >= f(v), Witness(f, u, v));
    }
    for (long k = 0; k < options.samples; ++k) {
      Vec v = sampler.NextVec(m);
      Vec u = Add(v, sampler.NextOrthant(m));
      orth.Record(f(u) >= f(v), Witness(f, u, v));
    }
    report["orthant_monotonicity"] = orth.ToJson();
  }
  return {report, pass ? 0 : 1};
}

CommandResult CmdCuts(const Instance& inst, const CommandOptions& options) {
  Json report = Header("cuts", inst, options);
  Json diags = Diagnostics(inst);
  int code = DiagnosticsExit(inst);
  const ConicSet2D W = inst.Set();
  std::vector<Vec> points = EnumerateIntegerPoints(W, options.box);
  report["oracle_points"] = points.size();

  Json cuts = Json::array();
  bool all_valid = true;
  auto emit = [&](const CutInequality& cut, std::optional<std::size_t> block) {
    OracleVerdict v = CheckCut(points, cut);
    all_valid = all_valid && v.valid;
    Json c = ToJson(cut, v);
    if (block) c["block"] = *block + 1;
    cuts.push_back(c);
  };
  auto diagnose = [&](std::optional<std::size_t> block, const Error& e) {
    Json d = ErrorJson(e);
    if (block) d["block"] = *block + 1;
    diags.push_back(d);
    code = std::max(code, ExitCodeFor(e.kind()));
  };

  for (std::size_t i = 0; i < inst.blocks.size(); ++i) {
    if (inst.blocks[i].kind() != ConicKind::kHyperbolaBranch) continue;
    try {
      auto [c1, c2] = HyperbolaCuts(inst.blocks[i]);
      emit(c1, i);
      emit(c2, i);
    } catch (const Error& e) {
      diagnose(i, e);
    }
  }
  std::vector<ConicConstraint> cons;
  for (const auto& b : inst.blocks) cons.push_back(b.constraint());
  for (const auto& weights : inst.query.aggregations) {
    try {
      emit(AggregationRoundCut(weights, cons, true), std::nullopt);
    } catch (const Error& e) {
      diagnose(std::nullopt, e);
    }
  }
  if (inst.query.gamma) {
    int j = inst.query.j.value_or(1);
    try {
      GammaFunction f(*inst.query.gamma, j);
      for (std::size_t i = 0; i < inst.blocks.size(); ++i) {
        if (inst.blocks[i].A().rows() != f.dimension()) continue;
        try {
          CutInequality cut = SplitAndProjectCut(f, inst.blocks[i].A(), inst.blocks[i].b());
          if (IsZero(cut.pi)) continue;
          emit(cut, i);
        } catch (const Error& e) {
          diagnose(i, e);
        }
      }
    } catch (const Error& e) {
      diagnose(std::nullopt, e);
    }
  }
  report["cuts"] = cuts;
  report["diagnostics"] = diags;
  report["all_valid"] = all_valid;
  if (!all_valid) code = std::max(code, 1);
  return {report, code};
}

CommandResult CmdCertify(const Instance& inst, const CommandOptions& options) {
  Json report = Header("certify", inst, options);
  report["diagnostics"] = Diagnostics(inst);
  if (!inst.diagnostics.empty()) return {report, DiagnosticsExit(inst)};
  const ConicSet2D W = inst.Set();
  try {
    Certificate cert = CertifyEmpty(W, options.box);
    bool valid = true;
    report["certificate"] = CertificateJson(cert, {}, valid);
    bool ok = cert.kind == CertificateKind::kEmpty && valid;
    return {report, ok ? 0 : 1};
  } catch (const Error& e) {
    return Failed(report, e);
  }
}

CommandResult CmdFace(const Instance& inst, const CommandOptions& options) {
  Json report = Header("face", inst, options);
  report["diagnostics"] = Diagnostics(inst);
  if (!inst.diagnostics.empty()) return {report, DiagnosticsExit(inst)};
  if (!inst.query.pi || !inst.query.pi0) {
    return Failed(report, Error(ErrorKind::kMalformedInput,
                                "face needs query.pi and query.pi0"));
  }
  const Vec& pi = *inst.query.pi;
  report["query"] = {{"pi", ToJson(pi)}, {"pi0", inst.query.pi0->get_str()}};
  const ConicSet2D W = inst.Set();
  try {
    Certificate cert = DeriveFace(W, pi, *inst.query.pi0, options.box);
    std::vector<Vec> points = EnumerateIntegerPoints(W, options.box);
    bool valid = true;
    report["certificate"] = CertificateJson(cert, points, valid);
    Polyhedron2D hull = IntegerHullWindow(W, options.box);
    Rational support = Dot(pi, points.front());
    std::size_t tight = 0;
    for (const auto& z : points) support = std::min(support, Dot(pi, z));
    for (const auto& z : points) tight += Dot(pi, z) == support ? 1 : 0;
    bool facet = false;
    for (const auto& c : hull.inequalities) {
      facet = facet || (c.pi == pi && c.pi0 == support);
    }
    report["hull_oracle"] = {{"support", ToJson(support)},
                             {"tight_points", tight},
                             {"facet", facet},
                             {"matches", support == Rational(*inst.query.pi0)}};
    bool ok = cert.kind == CertificateKind::kFace && valid &&
              support == Rational(*inst.query.pi0);
    return {report, ok ? 0 : 1};
  } catch (const Error& e) {
    return Failed(report, e);
  }
}

CommandResult CmdHull(const Instance& inst, const CommandOptions& options) {
  Json report = Header("hull", inst, options);
  report["diagnostics"] = Diagnostics(inst);
  if (!inst.diagnostics.empty()) return {report, DiagnosticsExit(inst)};
  const ConicSet2D W = inst.Set();
  std::vector<Vec> points = EnumerateIntegerPoints(W, options.box);
  Polyhedron2D hull = ConvexHull(points);
  hull.window_truncated = IntegerHullWindow(W, options.box).window_truncated;
  report["oracle_points"] = points.size();
  report["hull"] = ToJson(hull);
  bool valid = true;
  for (const auto& c : hull.inequalities) valid = valid && CheckCut(points, c).valid;
  report["all_valid"] = valid;
  return {report, valid ? 0 : 1};
}

std::string RenderText(const Json& report) {
  std::ostringstream os;
  auto cut_line = [&](const Json& c, const std::string& indent) {
    os << indent << c.value("text", "?");
    if (c.contains("oracle")) {
      os << "  [" << (c["oracle"]["valid"].get<bool>() ? "valid" : "INVALID") << " on "
         << c["oracle"]["points_checked"].get<std::size_t>() << " points";
      if (!c["oracle"]["violation"].is_null()) {
        os << ", violated at (" << c["oracle"]["violation"][0].get<std::string>() << ", "
           << c["oracle"]["violation"][1].get<std::string>() << ")";
      }
      os << "]";
    }
    if (c.contains("derivation")) os << "  " << c["derivation"]["generator"].get<std::string>();
    if (c.contains("pathway")) os << " / " << c["pathway"]["kind"].get<std::string>();
    os << "\n";
  };
  auto render = [&](const std::string& key, const Json& value) {
    if (key == "cuts" && value.is_array()) {
      os << "cuts: " << value.size() << "\n";
      for (const auto& c : value) cut_line(c, "  ");
    } else if (key == "certificate") {
      os << "result: " << value["result"].get<std::string>() << "\n";
      for (const auto& c : value["cuts"]) cut_line(c, "  ");
      for (const auto& d : value["diagnostics"]) os << "  note: " << d.get<std::string>() << "\n";
    } else if (key == "hull") {
      os << "hull: " << value["inequalities"].size() << " inequalities"
         << (value["window_truncated"].get<bool>() ? " (window truncated)" : "") << "\n";
      for (const auto& c : value["inequalities"]) cut_line(c, "  ");
    } else if (key == "diagnostics") {
      for (const auto& d : value) os << "diagnostic: " << (d.is_string() ? d.get<std::string>() : d.dump()) << "\n";
    } else if (value.is_string()) {
      os << key << ": " << value.get<std::string>() << "\n";
    } else {
      os << key << ": " << value.dump() << "\n";
    }
  };
  const char* lead[] = {"command", "instance", "instance_hash", "box"};
  for (const char* key : lead) {
    if (report.contains(key)) render(key, report[key]);
  }
  for (const auto& [key, value] : report.items()) {
    bool skip = key == "exit_code";
    for (const char* l : lead) skip = skip || key == l;
    if (!skip) render(key, value);
  }
  if (report.contains("exit_code")) render("exit_code", report["exit_code"]);
  return os.str();
}

}  // namespace soccuts
