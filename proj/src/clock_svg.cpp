#include "gregcycle/clock_svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace gregcycle {

namespace {

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // Avoid "-0.00" so output is stable across sign-of-zero noise.
  if (std::string_view(buf) == "-0.00") return "0.00";
  return buf;
}

}  // namespace

std::string render_clock_svg(const ClockFigureSpec& spec) {
  if (!(spec.radius > 0.0) || !std::isfinite(spec.radius)) {
    throw std::domain_error("clock radius must be a positive number");
  }
  const PeriodSequence seq = extract_period(spec.period);
  const double r = spec.radius;
  const double margin = 60.0;
  const double size = 2.0 * (r + margin);
  const double c = size / 2.0;
  const double dot = std::max(8.0, r * std::numbers::pi / kPeriod * 0.7);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed2(size) + "\" height=\"" + fixed2(size) +
         "\" viewBox=\"0 0 " + fixed2(size) + " " + fixed2(size) + "\">\n";
  svg += "  <title>S" + std::to_string(to_int(spec.period)) + " period-28 clock</title>\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <circle cx=\"" + fixed2(c) + "\" cy=\"" + fixed2(c) + "\" r=\"" + fixed2(r) +
         "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  svg += "  <text x=\"" + fixed2(c) + "\" y=\"" + fixed2(c) +
         "\" font-family=\"sans-serif\" font-size=\"24\" text-anchor=\"middle\" "
         "dominant-baseline=\"middle\">S<tspan baseline-shift=\"sub\" font-size=\"16\">" +
         std::to_string(to_int(spec.period)) + "</tspan></text>\n";

  for (int i = 0; i < kPeriod; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / kPeriod;
    const double x = c + r * std::sin(theta);
    const double y = c - r * std::cos(theta);
    svg += "  <g class=\"position\" data-index=\"" + std::to_string(i) + "\" data-value=\"" +
           std::to_string(seq.at(i)) + "\">\n";
    svg += "    <circle cx=\"" + fixed2(x) + "\" cy=\"" + fixed2(y) + "\" r=\"" + fixed2(dot) +
           "\" fill=\"#f2f2f2\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "    <text class=\"value\" x=\"" + fixed2(x) + "\" y=\"" + fixed2(y) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
           "dominant-baseline=\"middle\">" +
           std::to_string(seq.at(i)) + "</text>\n";
    if (spec.annotate_indices) {
      const double lr = r + dot + 14.0;
      svg += "    <text class=\"index\" x=\"" + fixed2(c + lr * std::sin(theta)) + "\" y=\"" +
             fixed2(c - lr * std::cos(theta)) +
             "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#555555\" text-anchor=\"middle\" "
             "dominant-baseline=\"middle\">" +
             std::to_string(i) + "</text>\n";
    }
    svg += "  </g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace gregcycle
