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
#include "jctherm/grid.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace jctherm {

void AxisRange::validate() const {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
        throw std::invalid_argument("axis range must be finite: " + to_string(*this));
    }
    if (!(step > 0)) {
        throw std::invalid_argument("axis step must be positive: " + to_string(*this));
    }
    if (start > stop) {
        throw std::invalid_argument("axis start exceeds stop: " + to_string(*this));
    }
}

std::size_t AxisRange::size() const {
    validate();
    return static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
}

double AxisRange::value(std::size_t i) const {
    return start + static_cast<double>(i) * step;
}

std::vector<double> AxisRange::values() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = value(i);
    }
    return out;
}

std::string to_string(const AxisRange &range) {
    std::ostringstream out;
    out.precision(12);
    out << range.start << ":" << range.stop << ":" << range.step;
    return out.str();
}

}  // namespace jctherm
