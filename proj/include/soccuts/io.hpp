#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "soccuts/errors.hpp"
#include "soccuts/theorem2d.hpp"

namespace soccuts {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct Query {
  std::optional<Vec> pi;
  std::optional<Integer> pi0;
  std::optional<Vec> gamma;
  std::optional<int> j;
  // One entry per aggregation: a dual weight per block.
  std::vector<std::vector<Vec>> aggregations;
};

// A block that could not be converted; the rest of the instance is kept.
struct BlockDiagnostic {
  std::size_t index = 0;  // 0-based position in "blocks"
  ErrorKind kind = ErrorKind::kUnsupported;
  std::string message;
};

struct Instance {
  std::string name;
  std::vector<ConicBlock2D> blocks;
  std::vector<std::string> labels;
  Query query;
  std::vector<BlockDiagnostic> diagnostics;
  std::string hash;

  ConicSet2D Set() const { return ConicSet2D(blocks); }
};

// Numbers are JSON integers or strings ("p/q" or finite decimals); JSON
// floating-point literals are rejected.
Rational RationalFromJson(const Json& value);
Json ToJson(const Rational& value);
Json ToJson(std::span<const Rational> values);

Instance ParseInstance(const Json& doc);
Instance LoadInstance(const std::filesystem::path& path);
// 16 hex digits of FNV-1a over the compact dump.
std::string InstanceHash(const Json& doc);

struct OracleVerdict {
  bool valid = true;
  std::size_t points_checked = 0;
  std::optional<Vec> violation;
};

OracleVerdict CheckCut(const std::vector<Vec>& points, const CutInequality& cut);

Json ToJson(const Box& box);
Json ToJson(const Derivation& derivation);
Json ToJson(const CutInequality& cut);
Json ToJson(const CutInequality& cut, const OracleVerdict& verdict);
Json ToJson(const Polyhedron2D& P);
Json ToJson(const PathwayRecord& record);
Json ToJson(const BlockDiagnostic& diagnostic);

// 0 success, 1 invalid cut or failed certificate, 2 malformed input,
// 3 unsupported construct.
int ExitCodeFor(ErrorKind kind);

}  // namespace soccuts
