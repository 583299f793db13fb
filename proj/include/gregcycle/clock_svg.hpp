#pragma once

#include <string>

#include "gregcycle/period28.hpp"

namespace gregcycle {

struct ClockFigureSpec {
  PeriodId period = PeriodId::S1;
  double radius = 200.0;  // pixels, > 0
  bool annotate_indices = true;
};

// Standalone SVG of a period sequence drawn as a 28-hour clock: index 0 at
// twelve o'clock, indices increasing clockwise. Output depends only on spec.
// Throws std::domain_error for a non-positive radius.
std::string render_clock_svg(const ClockFigureSpec& spec);

}  // namespace gregcycle
