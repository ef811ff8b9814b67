// Copyright 2026 The jctherm Authors
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

#ifndef JCTHERM_SVG_HEATMAP_H
#define JCTHERM_SVG_HEATMAP_H

#include <string>
#include <vector>

#include "jctherm/sweep.h"

namespace jctherm {

/// Grayscale heatmap of a two-axis sweep: first axis runs up the page,
/// second axis to the right. Values map linearly from white (minimum) to
/// black (maximum); none cells are drawn light blue, errors red.
/// Throws std::invalid_argument unless the records come from a 2-axis sweep.
std::string render_svg_heatmap(const std::vector<SweepRecord> &records, const std::string &title);

/// Throws IoError.
void write_svg_heatmap(const std::vector<SweepRecord> &records, const std::string &title, const std::string &path);

}  // namespace jctherm

#endif
