// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef TROPCONG_ERRORS_HPP
#define TROPCONG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropcong {

// Malformed or mismatched caller input (wrong context, bad literal, ...).
struct input_error : std::invalid_argument {
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A configured bound was exceeded (variable count, enumeration guard, ...).
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tropcong

#endif
