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

#ifndef JCTHERM_KLYSHKO_H
#define JCTHERM_KLYSHKO_H

#include <cstddef>
#include <optional>
#include <vector>

#include "jctherm/fock.h"
#include "jctherm/grid.h"

namespace jctherm {

/// A criterion value counts as violated when it is below -kViolationTolerance
/// times the magnitude of its two terms. The relative form keeps the test
/// invariant under rescaling of P and still resolves violations at high
/// orders, where both terms can be ~1e-20.
constexpr double kViolationTolerance = 1e-14;

/// (n+1) P_{n-1} P_{n+1} - n P_n^2. Negative values certify nonclassicality.
/// Throws IndexError when P has fewer than n+2 entries.
double klyshko_value(const NumberDistribution &p, int order);

/// (n+1) P_{n-1} P_{n+1} + n P_n^2, the scale against which a value is
/// compared.
double klyshko_scale(const NumberDistribution &p, int order);

bool is_violation(double value, double scale);

/// P_0 P_2 / P_1^2 < 1/2. Throws UndefinedRatioError if P_1 = 0 while
/// P_0 P_2 > 0; returns false when both vanish.
bool klyshko_ratio_check(const NumberDistribution &p);

struct KlyshkoReport {
    std::vector<double> values;  ///< values[n-1] holds order n
    std::vector<int> violated_orders;
    std::optional<int> first_violation;

    double value(int order) const {
        return values.at(static_cast<std::size_t>(order - 1));
    }
};

/// Orders 1..max_order. P must be exact (not truncated) on indices up to
/// max_order + 1.
KlyshkoReport detect(const NumberDistribution &p, int max_order);

/// Cutoff for output_number_stats such that every index read by orders
/// <= max_order is unaffected by truncation.
int klyshko_dim(double nbar, int max_order);

/// Minimal violated order of the oscillator after one interaction, or none.
std::optional<int> klyshko_first_violation(double nbar, double pe, double gt, int max_order);

/// First-violation map over an (nbar, gt) grid, row-major with nbar as the
/// slow axis.
struct RegionMap {
    std::vector<double> nbar;
    std::vector<double> gt;
    std::vector<std::optional<int>> first_violation;

    const std::optional<int> &at(std::size_t i_nbar, std::size_t i_gt) const {
        return first_violation[i_nbar * gt.size() + i_gt];
    }
    std::size_t detected_count() const;
};

RegionMap region_scan(const AxisRange &nbar, const AxisRange &gt, double pe, int max_order, int workers = 1);

}  // namespace jctherm

#endif
