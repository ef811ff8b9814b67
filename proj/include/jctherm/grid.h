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
#ifndef JCTHERM_GRID_H
#define JCTHERM_GRID_H

#include <cstddef>
#include <string>
#include <vector>

namespace jctherm {

/// Inclusive arithmetic progression start, start+step, ..., <= stop.
/// Values are computed as start + i*step (no accumulated drift); a stop
/// within 1e-9 steps of a grid point counts as reached.
struct AxisRange {
    double start = 0;
    double stop = 0;
    double step = 1;

    /// Throws std::invalid_argument unless step > 0, start <= stop, all finite.
    void validate() const;
    std::size_t size() const;
    double value(std::size_t i) const;
    std::vector<double> values() const;

    static AxisRange single(double v) {
        return AxisRange{v, v, 1};
    }
};

std::string to_string(const AxisRange &range);

}  // namespace jctherm

#endif
