#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "soccuts/cgf.hpp"
#include "soccuts/conic2d.hpp"

namespace soccuts {

// Integer window [lo1, hi1] x [lo2, hi2].
struct Box {
  long lo1 = -100, hi1 = 100, lo2 = -100, hi2 = 100;

  bool operator==(const Box&) const = default;
};

std::string ToString(const Box& box);

// Generators of the planar cone { v : n^T v >= 0 for all n in normals }.
// Redundant generators may appear; the zero cone gives an empty list.
std::vector<Vec> ConeGenerators(const std::vector<Vec>& normals);

// Intersection of planar conic blocks.
class ConicSet2D {
 public:
  ConicSet2D() = default;
  explicit ConicSet2D(std::vector<ConicBlock2D> blocks);

  const std::vector<ConicBlock2D>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  ConicSet2D With(ConicBlock2D extra) const;

  bool Contains(std::span<const Rational> x) const;
  bool ContainsStrictly(std::span<const Rational> x) const;

  const std::vector<Vec>& RecessionGenerators() const { return generators_; }
  bool IsBounded() const { return generators_.empty(); }
  bool IsPointed() const;
  bool InRecessionDual(std::span<const Rational> pi) const;
  bool InRecessionDualInterior(std::span<const Rational> pi) const;

  // A valid lower bound on inf { pi^T x : x in W }: the best single-block
  // support value, or a split pi = lambda g + mu h over two blocks.
  // Empty when no such bound is available.
  std::optional<QuadraticSurd> SupportLowerBound(
      std::span<const Rational> pi) const;

 private:
  std::vector<ConicBlock2D> blocks_;
  std::vector<Vec> normals_;
  std::vector<Vec> generators_;
};

// { x : every inequality holds }, optionally with its vertex list.
struct Polyhedron2D {
  std::vector<CutInequality> inequalities;
  std::vector<Vec> vertices;  // counter-clockwise when bounded
  bool empty = false;
  bool bounded = true;
  bool window_truncated = false;

  bool Contains(std::span<const Rational> x) const;
};

// Vertices of a bounded polygon, or nullopt when the region is unbounded.
// An empty region gives an empty list.
std::optional<std::vector<Vec>> BoundedVertices(
    const std::vector<CutInequality>& inequalities);

// Integer points of a bounded polygon; nullopt when unbounded or when the
// bounding box exceeds max_points.
std::optional<std::vector<Vec>> PolygonIntegerPoints(
    const std::vector<CutInequality>& inequalities,
    long max_points = 10'000'000);

std::vector<Vec> EnumerateIntegerPoints(const ConicSet2D& W, const Box& box);

// Convex hull of points, facets as primitive integer inward normals.
Polyhedron2D ConvexHull(std::vector<Vec> points);

Polyhedron2D IntegerHullWindow(const ConicSet2D& W, const Box& box);

// pi^T z < pi0 <= pi^T x for x in W, with pi a primitive integer vector.
CutInequality RationalSeparate(const ConicSet2D& W, std::span<const Rational> z);

struct OuterApproximation {
  bool empty = false;
  // P = { pi^T x <= pi0 } plus the conic-derived inequalities.
  Polyhedron2D P;
  std::size_t p_prime = 0;
  Rational epsilon;
  // At most four conic-derived inequalities Q with
  // Q n { pi^T x <= ceil(pi0) - 1 } lattice-free; empty when none exists.
  std::optional<std::vector<CutInequality>> pruned;
  std::vector<std::string> trace;
};

// B = { x in T : pi^T x <= pi0 } must be bounded (pi interior to rec*(T)).
OuterApproximation OuterApproxBounded(const ConicSet2D& T,
                                      std::span<const Rational> pi,
                                      const Rational& pi0);

struct Band {
  Vec pi;
  Integer pi0;
  QuadraticSurd lower;  // lower bound on min pi^T x over W
  QuadraticSurd upper;  // upper bound on max pi^T x over W
};

// First primitive pi (ordered by max-norm, then (pi2, pi1)) with
// W inside { pi0 <= pi^T x <= pi0 + 1 }.
std::optional<Band> LatticeFreeBand(const ConicSet2D& W, long max_norm = 64);

}  // namespace soccuts
