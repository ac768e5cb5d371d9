// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tropcong/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tropcong/errors.hpp"

namespace tropcong {

namespace {

double approx(const Rat& x) {
  return numerator(x).convert_to<double>() / denominator(x).convert_to<double>();
}

}  // namespace

std::string polytope_svg(const Polytope& P) {
  if (P.dim != 2)
    throw input_error("polytope_svg: only 2-dimensional polytopes are drawn");

  double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
  if (!P.empty()) {
    lo_x = hi_x = approx(P.vertices[0][0]);
    lo_y = hi_y = approx(P.vertices[0][1]);
    for (const auto& v : P.vertices) {
      lo_x = std::min(lo_x, approx(v[0]));
      hi_x = std::max(hi_x, approx(v[0]));
      lo_y = std::min(lo_y, approx(v[1]));
      hi_y = std::max(hi_y, approx(v[1]));
    }
  }
  const double margin = 1.0, scale = 40.0;
  lo_x -= margin; lo_y -= margin; hi_x += margin; hi_y += margin;
  const double width = (hi_x - lo_x) * scale;
  const double height = (hi_y - lo_y) * scale;
  auto sx = [&](double x) { return (x - lo_x) * scale; };
  auto sy = [&](double y) { return height - (y - lo_y) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  for (int gx = static_cast<int>(std::ceil(lo_x)); gx <= std::floor(hi_x); ++gx)
    out << "  <line x1=\"" << sx(gx) << "\" y1=\"0\" x2=\"" << sx(gx)
        << "\" y2=\"" << height << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
  for (int gy = static_cast<int>(std::ceil(lo_y)); gy <= std::floor(hi_y); ++gy)
    out << "  <line x1=\"0\" y1=\"" << sy(gy) << "\" x2=\"" << width
        << "\" y2=\"" << sy(gy) << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";

  if (!P.empty()) {
    // Walk the vertices in angular order around the centroid.
    double cx = 0, cy = 0;
    for (const auto& v : P.vertices) {
      cx += approx(v[0]);
      cy += approx(v[1]);
    }
    cx /= static_cast<double>(P.vertices.size());
    cy /= static_cast<double>(P.vertices.size());
    std::vector<std::size_t> order(P.vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const double aa = std::atan2(approx(P.vertices[a][1]) - cy,
                                   approx(P.vertices[a][0]) - cx);
      const double ab = std::atan2(approx(P.vertices[b][1]) - cy,
                                   approx(P.vertices[b][0]) - cx);
      return aa < ab;
    });
    out << "  <polygon points=\"";
    for (std::size_t i : order)
      out << sx(approx(P.vertices[i][0])) << "," << sy(approx(P.vertices[i][1])) << " ";
    out << "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"#3182bd\" "
           "stroke-width=\"2\"/>\n";
    for (const auto& v : P.vertices) {
      out << "  <circle cx=\"" << sx(approx(v[0])) << "\" cy=\"" << sy(approx(v[1]))
          << "\" r=\"3\" fill=\"#08519c\"/>\n";
      out << "  <text x=\"" << sx(approx(v[0])) + 5 << "\" y=\""
          << sy(approx(v[1])) - 5 << "\" font-size=\"11\">(" << rat_to_string(v[0])
          << "," << rat_to_string(v[1]) << ")</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tropcong
