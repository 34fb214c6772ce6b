#pragma once

#include <string>
#include <vector>

#include "soccuts/io.hpp"

namespace soccuts {

// Rendered files. Coordinates are floating point and meant for viewing only;
// every membership test behind them is exact.
struct PlotData {
  std::string svg;
  std::string csv;
};

struct PlotOptions {
  Box window{-5, 5, -5, 5};
  int resolution = 200;  // grid cells per axis for boundary tracing
};

// Block boundaries, the boundary of their intersection, integer points of W
// and the given cut lines.
PlotData PlotInstance(const Instance& instance, const std::vector<CutInequality>& cuts,
                      const PlotOptions& options);

// The slice gamma_3 = 1 of L^3 and of Gamma_1.
PlotData PlotGammaSlice(int resolution);

}  // namespace soccuts
