#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "soccuts/commands.hpp"
#include "soccuts/errors.hpp"

namespace py = pybind11;
using namespace soccuts;

namespace {

Vec ToVec(const std::vector<std::string>& items) {
  Vec v;
  for (const auto& s : items) v.push_back(ParseRational(s));
  return v;
}

CommandOptions Options(const std::optional<std::vector<long>>& box, long samples,
                       std::uint64_t seed, bool orthant) {
  CommandOptions o;
  if (box) {
    if (box->size() != 4) Fail(ErrorKind::kMalformedInput, "box needs four integers");
    o.box = {(*box)[0], (*box)[1], (*box)[2], (*box)[3]};
  }
  o.samples = samples;
  o.seed = seed;
  o.orthant = orthant;
  return o;
}

// Reports cross the boundary as JSON text.
std::pair<std::string, int> Wrap(const CommandResult& r) {
  Json report = r.report;
  report["exit_code"] = r.exit_code;
  return {report.dump(), r.exit_code};
}

Instance Parse(const std::string& text) { return ParseInstance(Json::parse(text)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "SoccutsError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("kind") = std::string(ToString(e.kind()));
      exc.attr("exit_code") = ExitCodeFor(e.kind());
      PyErr_SetObject(error.ptr(), exc.ptr());
    } catch (const Json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("f_gamma", [](const std::vector<std::string>& gamma, int j,
                      const std::vector<std::string>& v) {
    return ToString(EvalFGamma(ToVec(gamma), j, ToVec(v)));
  });
  m.def("classify_gamma", [](const std::vector<std::string>& gamma, int j) {
    return std::string(ToString(ClassifyGamma(ToVec(gamma), j)));
  });
  m.def("check_function",
        [](const std::vector<std::string>& gamma, int j, long samples, std::uint64_t seed,
           bool orthant) {
          return Wrap(CmdCheckFunction(ToVec(gamma), j, Options({}, samples, seed, orthant)));
        },
        py::arg("gamma"), py::arg("j"), py::arg("samples") = 10000, py::arg("seed") = 1,
        py::arg("orthant") = false);

  auto command = [&](const char* name, CommandResult (*fn)(const Instance&, const CommandOptions&)) {
    m.def(name,
          [fn](const std::string& instance_json, std::optional<std::vector<long>> box) {
            return Wrap(fn(Parse(instance_json), Options(box, 10000, 1, false)));
          },
          py::arg("instance_json"), py::arg("box") = py::none());
  };
  command("cuts", CmdCuts);
  command("certify", CmdCertify);
  command("face", CmdFace);
  command("hull", CmdHull);
}
