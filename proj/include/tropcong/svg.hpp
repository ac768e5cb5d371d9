// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef TROPCONG_SVG_HPP
#define TROPCONG_SVG_HPP

#include <string>

#include "tropcong/polytope.hpp"

namespace tropcong {

// Renders a 2-dimensional polytope as an SVG drawing: integer grid, filled
// hull, labeled vertices. Throws input_error for any other dimension.
std::string polytope_svg(const Polytope& P);

}  // namespace tropcong

#endif
