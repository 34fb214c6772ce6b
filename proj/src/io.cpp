#include "soccuts/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

#include "soccuts/errors.hpp"

namespace soccuts {

namespace {

[[noreturn]] void Malformed(const std::string& where, const std::string& what) {
  Fail(ErrorKind::kMalformedInput, where + ": " + what);
}

const Json& Field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) Malformed(where, std::string("missing \"") + key + "\"");
  return obj.at(key);
}

Vec VecFromJson(const Json& value, const std::string& where, std::size_t size = 0) {
  if (!value.is_array()) Malformed(where, "expected an array of numbers");
  if (size != 0 && value.size() != size) {
    Malformed(where, "expected " + std::to_string(size) + " entries");
  }
  Vec out;
  for (const auto& v : value) out.push_back(RationalFromJson(v));
  return out;
}

Matrix MatrixFromJson(const Json& value, const std::string& where, std::size_t cols) {
  if (!value.is_array() || value.empty()) Malformed(where, "expected a list of rows");
  std::vector<Vec> rows;
  for (const auto& row : value) rows.push_back(VecFromJson(row, where, cols));
  return Matrix::FromRows(rows);
}

Integer IntegerFromJson(const Json& value, const std::string& where) {
  Rational r = RationalFromJson(value);
  if (!IsInteger(r)) Malformed(where, "expected an integer");
  return r.get_num();
}

ConicBlock2D HalfSpaceBlock(const Vec& a, const Rational& rhs) {
  return ConicBlock2D::FromSoc(Matrix::FromRows({Vec{0, 0}, a}), Vec{0, rhs});
}

ConicBlock2D BlockFromJson(const Json& blk, const std::string& where, std::string& label) {
  std::string type = Field(blk, "type", where).get<std::string>();
  if (type == "soc") {
    Matrix A = MatrixFromJson(Field(blk, "A", where), where + ".A", 2);
    Vec b = VecFromJson(Field(blk, "b", where), where + ".b", A.rows());
    label = "soc";
    return ConicBlock2D::FromSoc(A, b);
  }
  if (type == "halfspace") {
    Vec a = VecFromJson(Field(blk, "a", where), where + ".a", 2);
    Rational rhs = RationalFromJson(Field(blk, "rhs", where));
    label = "halfspace";
    return HalfSpaceBlock(a, rhs);
  }
  if (type == "quadratic") {
    QuadraticConic q;
    q.Q = MatrixFromJson(Field(blk, "Q", where), where + ".Q", 2);
    if (q.Q.rows() != 2) Malformed(where + ".Q", "expected a 2x2 matrix");
    q.d = VecFromJson(Field(blk, "d", where), where + ".d", 2);
    q.s = RationalFromJson(Field(blk, "s", where));
    std::string sense = blk.value("sense", ">=");
    if (sense == ">=") {
      q.sense = RegionSense::kGreaterEqual;
    } else if (sense == "<=") {
      q.sense = RegionSense::kLessEqual;
    } else {
      Malformed(where + ".sense", "expected \">=\" or \"<=\"");
    }
    std::string branch = blk.value("branch", "positive");
    if (branch == "positive") {
      q.branch = BranchSelector::kPositive;
    } else if (branch == "negative") {
      q.branch = BranchSelector::kNegative;
    } else {
      Malformed(where + ".branch", "expected \"positive\" or \"negative\"");
    }
    if (blk.contains("interior_point")) {
      q.interior_point = VecFromJson(blk.at("interior_point"), where + ".interior_point", 2);
    }
    ConicBlock2D block = ToBlock(q);
    label = std::string(ToString(block.kind()));
    return block;
  }
  Malformed(where + ".type", "unknown block type \"" + type + "\"");
}

Query QueryFromJson(const Json& q) {
  Query out;
  if (q.contains("pi")) out.pi = VecFromJson(q.at("pi"), "query.pi", 2);
  if (q.contains("pi0")) out.pi0 = IntegerFromJson(q.at("pi0"), "query.pi0");
  if (q.contains("gamma")) out.gamma = VecFromJson(q.at("gamma"), "query.gamma");
  if (q.contains("j")) {
    if (!q.at("j").is_number_integer()) Malformed("query.j", "expected an integer");
    out.j = q.at("j").get<int>();
  }
  if (q.contains("aggregations")) {
    const Json& aggs = q.at("aggregations");
    if (!aggs.is_array()) Malformed("query.aggregations", "expected a list");
    for (std::size_t k = 0; k < aggs.size(); ++k) {
      std::string where = "query.aggregations[" + std::to_string(k) + "]";
      if (!aggs[k].is_array()) Malformed(where, "expected one weight vector per block");
      std::vector<Vec> weights;
      for (const auto& y : aggs[k]) weights.push_back(VecFromJson(y, where));
      out.aggregations.push_back(std::move(weights));
    }
  }
  return out;
}

std::string Hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

Rational RationalFromJson(const Json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Rational(Integer(std::to_string(value.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number_float()) {
    Fail(ErrorKind::kMalformedInput,
         "floating-point literal " + value.dump() + "; write it as a string such as \"" +
             value.dump() + "\" or \"p/q\"");
  }
  Fail(ErrorKind::kMalformedInput, "expected a number, got " + value.dump());
}

Json ToJson(const Rational& value) { return ToString(value); }

Json ToJson(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(ToString(v));
  return out;
}

std::string InstanceHash(const Json& doc) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : doc.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return Hex64(h);
}

Instance ParseInstance(const Json& doc) {
  if (!doc.is_object()) Malformed("instance", "expected a JSON object");
  const Json& version = Field(doc, "schema_version", "instance");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    Malformed("schema_version", "expected " + std::to_string(kSchemaVersion));
  }
  Instance inst;
  inst.hash = InstanceHash(doc);
  inst.name = doc.value("name", "");
  const Json& blocks = Field(doc, "blocks", "instance");
  if (!blocks.is_array()) Malformed("blocks", "expected a list");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::string where = "blocks[" + std::to_string(i) + "]";
    std::string label;
    try {
      inst.blocks.push_back(BlockFromJson(blocks[i], where, label));
      inst.labels.push_back(label);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kMalformedInput) throw;
      inst.diagnostics.push_back({i, e.kind(), e.what()});
    } catch (const Json::exception& e) {
      Malformed(where, e.what());
    }
  }
  if (doc.contains("bounds")) {
    const Json& bounds = doc.at("bounds");
    if (!bounds.is_array() || bounds.size() != 2) {
      Malformed("bounds", "expected [[lo1, hi1], [lo2, hi2]] with null for no bound");
    }
    for (std::size_t k = 0; k < 2; ++k) {
      const Json& pair = bounds[k];
      std::string where = "bounds[" + std::to_string(k) + "]";
      if (!pair.is_array() || pair.size() != 2) Malformed(where, "expected [lo, hi]");
      Vec e{0, 0};
      e[k] = 1;
      std::string x = "x" + std::to_string(k + 1);
      if (!pair[0].is_null()) {
        Rational lo = RationalFromJson(pair[0]);
        inst.blocks.push_back(HalfSpaceBlock(e, lo));
        inst.labels.push_back("bound " + x + " >= " + ToString(lo));
      }
      if (!pair[1].is_null()) {
        Rational hi = RationalFromJson(pair[1]);
        inst.blocks.push_back(HalfSpaceBlock(Negate(e), -hi));
        inst.labels.push_back("bound " + x + " <= " + ToString(hi));
      }
    }
  }
  if (doc.contains("query")) {
    try {
      inst.query = QueryFromJson(doc.at("query"));
    } catch (const Json::exception& e) {
      Malformed("query", e.what());
    }
  }
  return inst;
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kMalformedInput, "cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    Fail(ErrorKind::kMalformedInput, path.string() + ": " + e.what());
  }
  return ParseInstance(doc);
}

OracleVerdict CheckCut(const std::vector<Vec>& points, const CutInequality& cut) {
  OracleVerdict v;
  v.points_checked = points.size();
  for (const auto& z : points) {
    if (!cut.IsSatisfiedBy(z)) {
      v.valid = false;
      v.violation = z;
      break;
    }
  }
  return v;
}

Json ToJson(const Box& box) { return Json::array({box.lo1, box.hi1, box.lo2, box.hi2}); }

Json ToJson(const Derivation& d) {
  Json out = {{"generator", d.generator}};
  if (d.gamma) out["gamma"] = ToJson(*d.gamma);
  if (d.j) out["j"] = *d.j;
  if (!d.weights.empty()) {
    Json w = Json::array();
    for (const auto& y : d.weights) w.push_back(ToJson(y));
    out["weights"] = w;
  }
  if (d.tau) out["tau"] = ToJson(*d.tau);
  if (!d.params.empty()) out["params"] = d.params;
  return out;
}

Json ToJson(const CutInequality& cut) {
  return {{"pi", ToJson(cut.pi)},
          {"pi0", ToJson(cut.pi0)},
          {"text", cut.ToString()},
          {"derivation", ToJson(cut.derivation)}};
}

Json ToJson(const CutInequality& cut, const OracleVerdict& verdict) {
  Json out = ToJson(cut);
  out["oracle"] = {{"valid", verdict.valid}, {"points_checked", verdict.points_checked}};
  out["oracle"]["violation"] = verdict.violation ? ToJson(*verdict.violation) : Json(nullptr);
  return out;
}

Json ToJson(const Polyhedron2D& P) {
  Json ineqs = Json::array();
  for (const auto& c : P.inequalities) ineqs.push_back(ToJson(c));
  Json verts = Json::array();
  for (const auto& v : P.vertices) verts.push_back(ToJson(v));
  return {{"inequalities", ineqs},
          {"vertices", verts},
          {"empty", P.empty},
          {"bounded", P.bounded},
          {"window_truncated", P.window_truncated}};
}

Json ToJson(const PathwayRecord& r) {
  Json out = {{"kind", std::string(ToString(r.kind))}};
  if (r.block) out["block"] = *r.block + 1;
  if (r.asymptote) out["asymptote"] = *r.asymptote;
  if (r.alpha) out["alpha"] = r.alpha->ToString();
  if (r.rounded) {
    out[r.kind == Pathway::kHyperbolaCut ? "beta" : "ceil_alpha"] = r.rounded->get_str();
  }
  if (r.P) out["P"] = ToJson(*r.P);
  if (r.pruned) {
    Json q = Json::array();
    for (const auto& c : *r.pruned) q.push_back(ToJson(c));
    out["pruned"] = q;
  }
  if (!r.trace.empty()) out["trace"] = r.trace;
  return out;
}

Json ToJson(const BlockDiagnostic& d) {
  return {{"block", d.index + 1}, {"kind", std::string(ToString(d.kind))}, {"message", d.message}};
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedInput:
      return 2;
    case ErrorKind::kDomain:
    case ErrorKind::kDegenerate:
    case ErrorKind::kUnsupported:
    case ErrorKind::kProjectionInvalid:
    case ErrorKind::kDegenerateAggregation:
      return 3;
    case ErrorKind::kHypothesisViolation:
    case ErrorKind::kNotSeparable:
    case ErrorKind::kInvalidInequality:
    case ErrorKind::kNotAFace:
    case ErrorKind::kNotEmpty:
    case ErrorKind::kInternalInconsistency:
      return 1;
  }
  return 1;
}

}  // namespace soccuts
