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

#ifndef JCTHERM_ION_EXPERIMENT_H
#define JCTHERM_ION_EXPERIMENT_H

#include <numbers>
#include <optional>
#include <vector>

#include "jctherm/fock.h"
#include "jctherm/grid.h"
#include "jctherm/klyshko.h"

namespace jctherm {

constexpr double kMaxSigma = 0.1;

/// Population-readout error model: each of the lowest `populations` Fock
/// probabilities is known to within +-sigma.
struct MeasurementModel {
    double sigma = 0.01;
    int populations = 5;
    std::vector<int> orders{1, 2, 3};

    /// Throws std::invalid_argument for sigma outside [0, kMaxSigma],
    /// populations < 3, or an empty order list; UnmeasurableOrderError for an
    /// order that needs an unmeasured population.
    void validate() const;
    bool measurable(int order) const {
        return order >= 1 && order + 1 < populations;
    }
};

/// Klyshko value with P_{n-1}, P_{n+1} raised and P_n lowered by sigma,
/// clamped to [0, 1]. Negative only when the violation survives every
/// admissible readout error.
double worst_case_klyshko(const NumberDistribution &p, const MeasurementModel &model, int order);

/// Smallest order in model.orders whose worst-case value is negative.
std::optional<int> robust_first_violation(const NumberDistribution &p, const MeasurementModel &model);

/// Robust first violation over an (nbar, gt) grid with the two-level system
/// reset to its ground state (pe = 0). Layout matches region_scan.
RegionMap robust_region_scan(const AxisRange &nbar, const AxisRange &gt, const MeasurementModel &model,
                             int workers = 1);

/// Cutoff used by robust scans.
int robust_dim(double nbar, const MeasurementModel &model);

/// Default trap constants. Only used to turn a pulse duration into gt.
struct IonTrapConstants {
    double lamb_dicke = 0.1;
    double rabi_frequency = 2 * std::numbers::pi * 100e3;   ///< rad/s
    double trap_frequency = 2 * std::numbers::pi * 1e6;     ///< rad/s

    /// g = eta * Omega.
    double coupling() const {
        return lamb_dicke * rabi_frequency;
    }
    double pulse_area(double seconds) const {
        return coupling() * seconds;
    }
};

}  // namespace jctherm

#endif
