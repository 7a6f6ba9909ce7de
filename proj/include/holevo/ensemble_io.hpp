/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// JSON ensemble documents:
//
//   {"dim": 2, "states": [{"p": 0.5, "matrix": [[[re, im], [re, im]], [[re, im], [re, im]]]}, ...]}
//   {"dim": 2, "states": [{"p": 0.5, "bloch": [x, y, z]}, ...]}
//
// A document uses one form for every state. Syntax and schema problems raise
// ParseError; physically invalid content raises InvariantError.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "holevo/ensemble.hpp"

namespace holevo {

Ensemble parse_ensemble(std::string_view text);
Ensemble read_ensemble_file(const std::string& path);

/// Matrix-form document with entries printed to round-trip precision.
std::string ensemble_to_json(const Ensemble& e);

}  // namespace holevo
