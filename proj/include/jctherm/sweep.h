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

#ifndef JCTHERM_SWEEP_H
#define JCTHERM_SWEEP_H

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jctherm/grid.h"

namespace jctherm {

enum class Quantity {
    kLnp,
    kLnpFiltered,
    kLnpRepeat,
    kKlyshkoMinOrder,
    kKlyshkoRobustMinOrder,
    kAsymptoticPeStar,
};

std::string_view quantity_name(Quantity q);
/// Throws std::invalid_argument for an unknown name.
Quantity parse_quantity(std::string_view name);

/// Parameters each quantity reads, as axis or fixed names.
std::vector<std::string> required_parameters(Quantity q);

struct SweepAxis {
    std::string name;
    AxisRange range;
};

struct SweepSpec {
    std::vector<SweepAxis> axes;
    std::map<std::string, double> fixed;
    Quantity quantity = Quantity::kLnp;

    /// Throws std::invalid_argument on a bad range, an unknown or repeated
    /// name, or a missing parameter.
    void validate() const;
    std::size_t cell_count() const;
};

enum class CellStatus { kValue, kNone, kError };

struct SweepRecord {
    std::vector<std::pair<std::string, double>> coordinates;
    CellStatus status = CellStatus::kValue;
    double value = 0;
    std::map<std::string, double> aux;
    std::string error;

    bool operator==(const SweepRecord &other) const = default;
};

/// Evaluates every grid point, row-major over the axes as listed (the last
/// axis varies fastest). Cell failures become kError records.
std::vector<SweepRecord> run_sweep(const SweepSpec &spec, int workers = 1);

std::size_t error_count(const std::vector<SweepRecord> &records);

/// %.12g with negative zero printed as 0.
std::string format_real(double x);

/// Header: coordinate names, "value", then aux names sorted. Empty field for
/// none, "error" for failed cells. LF line endings, trailing newline.
std::string format_csv(const std::vector<SweepRecord> &records);

/// Writes format_csv to path, or to stdout_stream for "-". Throws IoError.
void write_csv(const std::vector<SweepRecord> &records, const std::string &path,
               std::ostream &stdout_stream = std::cout);

/// Inverse of format_csv (error messages are not preserved).
std::vector<SweepRecord> parse_csv(const std::string &text);

}  // namespace jctherm

#endif
