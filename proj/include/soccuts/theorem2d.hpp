#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "soccuts/hull.hpp"

namespace soccuts {

struct BindingConic {
  std::size_t index = 0;
  SupportResult support;
  // 1 or 2 for hyperbola blocks, matching Asymptotes().
  std::optional<int> asymptote;
};

// For pi on the boundary of rec*(W), a block whose infimum of pi^T x equals
// the infimum over W. Equality is checked by following the block's
// minimizing tail (a boundary ray or a hyperbola branch) to infinity and
// testing it against every other block.
BindingConic FindBindingConic(const ConicSet2D& W, std::span<const Rational> pi);

enum class Pathway { kBoundedOuterApprox, kHyperbolaCut, kHalfSpaceRounding };

std::string_view ToString(Pathway pathway);

struct PathwayRecord {
  Pathway kind = Pathway::kBoundedOuterApprox;
  std::optional<std::size_t> block;  // 0-based
  std::optional<int> asymptote;
  std::optional<QuadraticSurd> alpha;
  std::optional<Integer> rounded;  // ceil(alpha), or beta for hyperbola cuts
  std::optional<Polyhedron2D> P;
  std::optional<std::vector<CutInequality>> pruned;
  std::vector<std::string> trace;
};

enum class CertificateKind { kEmpty, kFace, kNotProven };

std::string_view ToString(CertificateKind kind);

struct Certificate {
  CertificateKind kind = CertificateKind::kNotProven;
  std::vector<CutInequality> cuts;
  std::vector<PathwayRecord> pathways;  // one per cut
  Box box;
  std::size_t oracle_points = 0;  // integer points of W in the box
  std::vector<std::string> diagnostics;
};

// A rational point strictly inside every block, by grid refinement.
std::optional<Vec> FindInteriorPoint(const ConicSet2D& W);

// Indices of blocks that never strictly improve the support bound of the
// remaining blocks over eight sample directions.
std::vector<std::size_t> RedundantBlocks(const ConicSet2D& W);

// c1 and c2 have no common real solution.
bool LinearlyInconsistent(const CutInequality& c1, const CutInequality& c2);

// True when the ray x0 + t d (t -> infinity) eventually lies in every block.
bool TailInside(const ConicSet2D& W, std::span<const QuadraticSurd> x0,
                std::span<const Rational> d);

Certificate CertifyEmpty(const ConicSet2D& W, const Box& box = {});

Certificate DeriveFace(const ConicSet2D& W, std::span<const Rational> pi,
                       const Integer& pi0, const Box& box = {});

}  // namespace soccuts
