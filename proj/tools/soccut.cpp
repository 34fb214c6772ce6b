#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "soccuts/commands.hpp"
#include "soccuts/errors.hpp"
#include "soccuts/plot.hpp"

using namespace soccuts;

namespace {

struct Flags {
  std::vector<long> box;
  long samples = 10000;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  std::string instance;
  std::vector<std::string> gamma;
  int j = 1;
  bool orthant = false;
  std::vector<std::string> pi;
  std::string pi0;
  int resolution = 200;
  bool gamma_slice = false;
};

CommandOptions Options(const Flags& flags, const Box& fallback = {}) {
  CommandOptions o;
  o.box = fallback;
  if (flags.box.size() == 4) o.box = {flags.box[0], flags.box[1], flags.box[2], flags.box[3]};
  o.samples = flags.samples;
  o.seed = flags.seed;
  o.orthant = flags.orthant;
  return o;
}

void Emit(const Flags& flags, const Json& report) {
  std::string text = flags.format == "json" ? report.dump(2) + "\n" : RenderText(report);
  if (flags.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(flags.out, std::ios::binary);
  if (!out) Fail(ErrorKind::kMalformedInput, "cannot write " + flags.out);
  out << text;
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorKind::kMalformedInput, "cannot write " + path);
  out << content;
}

Vec ParseList(const std::vector<std::string>& items) {
  Vec v;
  for (const auto& s : items) v.push_back(ParseRational(s));
  return v;
}

int RunPlot(const Flags& flags) {
  if (flags.out.empty()) Fail(ErrorKind::kMalformedInput, "plot needs --out BASE");
  std::string base = flags.out;
  if (base.size() > 4 && base.substr(base.size() - 4) == ".svg") base.resize(base.size() - 4);
  PlotData data;
  Json report = {{"command", "plot"}};
  if (flags.gamma_slice) {
    data = PlotGammaSlice(flags.resolution);
    report["slice"] = "gamma_3 = 1";
  } else {
    Instance inst;
    if (!flags.instance.empty()) inst = LoadInstance(flags.instance);
    PlotOptions po;
    po.window = Options(flags, po.window).box;
    po.resolution = flags.resolution;
    std::vector<CutInequality> cuts;
    for (const auto& b : inst.blocks) {
      if (b.kind() != ConicKind::kHyperbolaBranch) continue;
      auto [c1, c2] = HyperbolaCuts(b);
      cuts.push_back(c1);
      cuts.push_back(c2);
    }
    data = PlotInstance(inst, cuts, po);
    report["instance"] = inst.name;
    report["instance_hash"] = inst.hash;
    report["box"] = ToJson(po.window);
    report["cuts"] = Json::array();
    for (const auto& c : cuts) report["cuts"].push_back({{"text", c.ToString()}});
  }
  WriteFile(base + ".svg", data.svg);
  WriteFile(base + ".csv", data.csv);
  report["files"] = {base + ".svg", base + ".csv"};
  report["note"] = "floating-point rendering, presentation only";
  Flags echo = flags;
  echo.out.clear();
  Emit(echo, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cutting planes for planar conic sets, in exact arithmetic"};
  app.require_subcommand(1);
  Flags flags;

  auto common = [&](CLI::App* sub, bool with_instance) {
    if (with_instance) {
      sub->add_option("instance", flags.instance, "instance JSON file")->required();
    }
    sub->add_option("--box", flags.box, "enumeration window A B C D = [A,B] x [C,D]")
        ->expected(4);
    sub->add_option("--format", flags.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", flags.out, "write the report to this path");
  };

  auto* check = app.add_subcommand("check-function", "property suites for f_gamma");
  check->add_option("--gamma", flags.gamma, "gamma entries, e.g. 0,1/2,1/2")
      ->delimiter(',')
      ->required();
  check->add_option("--j", flags.j, "1-based index j");
  check->add_option("--samples", flags.samples, "random pairs per property");
  check->add_option("--seed", flags.seed, "random seed");
  check->add_flag("--orthant", flags.orthant, "also test monotonicity over R^m_+");
  common(check, false);

  auto* cuts = app.add_subcommand("cuts", "asymptote, aggregation and f_gamma cuts");
  common(cuts, true);
  auto* certify = app.add_subcommand("certify", "certify that W has no integer point");
  common(certify, true);
  auto* face = app.add_subcommand("face", "derive a face of the integer hull");
  common(face, true);
  face->add_option("--pi", flags.pi, "override query.pi, e.g. 1,0")->delimiter(',');
  face->add_option("--pi0", flags.pi0, "override query.pi0");
  auto* hull = app.add_subcommand("hull", "integer hull inside the window");
  common(hull, true);
  auto* plot = app.add_subcommand("plot", "SVG and CSV rendering");
  plot->add_option("instance", flags.instance, "instance JSON file");
  plot->add_option("--box", flags.box, "window A B C D")->expected(4);
  plot->add_option("--resolution", flags.resolution, "grid cells per axis");
  plot->add_flag("--gamma-slice", flags.gamma_slice, "render the slice gamma_3 = 1");
  plot->add_option("--format", flags.format)->check(CLI::IsMember({"text", "json"}));
  plot->add_option("--out", flags.out, "output base path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "plot") return RunPlot(flags);
    CommandResult result;
    if (command == "check-function") {
      result = CmdCheckFunction(ParseList(flags.gamma), flags.j, Options(flags));
    } else {
      Instance inst = LoadInstance(flags.instance);
      if (command == "cuts") {
        result = CmdCuts(inst, Options(flags));
      } else if (command == "certify") {
        result = CmdCertify(inst, Options(flags));
      } else if (command == "face") {
        if (!flags.pi.empty()) inst.query.pi = ParseList(flags.pi);
        if (!flags.pi0.empty()) {
          Rational p0 = ParseRational(flags.pi0);
          if (!IsInteger(p0)) Fail(ErrorKind::kMalformedInput, "--pi0 must be an integer");
          inst.query.pi0 = p0.get_num();
        }
        result = CmdFace(inst, Options(flags));
      } else {
        result = CmdHull(inst, Options(flags));
      }
    }
    result.report["exit_code"] = result.exit_code;
    Emit(flags, result.report);
    return result.exit_code;
  } catch (const Error& e) {
    Json report = {{"command", command},
                   {"error", {{"kind", std::string(ToString(e.kind()))}, {"message", e.what()}}}};
    report["exit_code"] = ExitCodeFor(e.kind());
    Flags echo = flags;
    try {
      Emit(echo, report);
    } catch (const Error&) {
      std::cerr << e.what() << "\n";
    }
    return ExitCodeFor(e.kind());
  }
}
