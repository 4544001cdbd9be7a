// Copyright 2026 The qperc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// File formats and report formatting.
//
// Dataset (.qds): UTF-8 lines of "state -> state", '#' comments, blanks.
// Model (.qpm): "QPM1" magic, "mode:" and "threshold:" lines, then labeled
// matrix blocks W, F, S, WNEW. Each block header carries "rows cols" and
// each row lists "re,im" pairs at 17 significant digits, which round-trips
// doubles exactly. Decimal text beats binary here: golden files stay
// diffable.

#include <filesystem>
#include <string>
#include <string_view>

#include "qperc/perceptron.hpp"

namespace qperc {

/// Parses dataset text. ParseError carries 1-based line and column. States
/// within 1e-6 of unit norm are renormalized exactly (8-digit coefficients
/// land slightly off the unit sphere); anything farther off fails the
/// training-set validation.
TrainingSet parse_dataset(std::string_view text);

/// Canonical dataset text; reparsing yields the same vectors within 1e-8.
std::string format_dataset(const TrainingSet& ts);

TrainingSet load_dataset(const std::filesystem::path& path);

void save_model(const PerceptronModel& model, const std::filesystem::path& path);

PerceptronModel load_model(const std::filesystem::path& path);

/// Aligned rows like "[ 0.70710678  -0.70710678 ]" at the given number of
/// significant digits. Entries with zero imaginary part print as reals.
std::string format_matrix(const Matrix& m, int significant_digits = 8);

/// One double at the given number of significant digits.
std::string format_real(double value, int significant_digits = 8);

const char* mode_name(ModelMode mode);  // "Unitary" / "Decomposed"

}  // namespace qperc
