#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lineops/arrangement.hpp"

namespace lineops {

struct RenderSpec {
  mpq_class xmin = -2, xmax = 2, ymin = -2, ymax = 2;
  int chart = 2;  // index of the coordinate set to 1; the other two are (x, y) in order
  int root_index = 0;
  bool mark_points = true;  // circles at points of multiplicity >= 2
  int width = 600, height = 600;
};

struct RenderLayer {
  Arrangement lines;
  std::string style;  // CSS class, e.g. "step0"
};

struct RenderResult {
  std::string svg;
  std::size_t segments = 0;
  std::size_t omitted = 0;         // lines at infinity for the chart
  std::size_t outside_window = 0;  // real lines that miss the window
  std::size_t points = 0;
};

RenderResult render_svg(const std::vector<RenderLayer>& layers, const RenderSpec& spec = {});

}  // namespace lineops
