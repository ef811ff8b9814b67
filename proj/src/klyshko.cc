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

#include "jctherm/klyshko.h"

#include <algorithm>
#include <string>

#include "jctherm/errors.h"
#include "jctherm/jc_dynamics.h"
#include "jctherm/parallel.h"

namespace jctherm {

namespace {

void require_order(const NumberDistribution &p, int order) {
    if (order < 1) {
        throw std::invalid_argument("criterion order must be >= 1, got " + std::to_string(order));
    }
    if (p.size() < static_cast<std::size_t>(order) + 2) {
        throw IndexError(
            "order " + std::to_string(order) + " needs " + std::to_string(order + 2) + " populations, have " +
            std::to_string(p.size()));
    }
}

}  // namespace

double klyshko_value(const NumberDistribution &p, int order) {
    require_order(p, order);
    const double n = order;
    return (n + 1) * p[order - 1] * p[order + 1] - n * p[order] * p[order];
}

double klyshko_scale(const NumberDistribution &p, int order) {
    require_order(p, order);
    const double n = order;
    return (n + 1) * p[order - 1] * p[order + 1] + n * p[order] * p[order];
}

bool is_violation(double value, double scale) {
    return value < -kViolationTolerance * scale;
}

bool klyshko_ratio_check(const NumberDistribution &p) {
    require_order(p, 1);
    double outer = p[0] * p[2];
    double middle = p[1] * p[1];
    if (p[1] == 0) {
        if (outer > 0) {
            throw UndefinedRatioError("P_0 P_2 / P_1^2 is undefined: P_1 = 0 with P_0 P_2 > 0");
        }
        return false;
    }
    return outer / middle < 0.5;
}

KlyshkoReport detect(const NumberDistribution &p, int max_order) {
    if (max_order < 1) {
        throw std::invalid_argument("max_order must be >= 1");
    }
    require_order(p, max_order);
    KlyshkoReport report;
    report.values.reserve(max_order);
    for (int n = 1; n <= max_order; ++n) {
        double v = klyshko_value(p, n);
        report.values.push_back(v);
        if (is_violation(v, klyshko_scale(p, n))) {
            report.violated_orders.push_back(n);
        }
    }
    if (!report.violated_orders.empty()) {
        report.first_violation = report.violated_orders.front();
    }
    return report;
}

int klyshko_dim(double nbar, int max_order) {
    // output_number_stats entries 0..dim-2 do not see the cutoff.
    return std::max(required_dim(nbar, kDefaultTailTolerance), max_order + 3);
}

std::optional<int> klyshko_first_violation(double nbar, double pe, double gt, int max_order) {
    NumberDistribution p = output_number_stats(nbar, pe, gt, klyshko_dim(nbar, max_order));
    return detect(p, max_order).first_violation;
}

std::size_t RegionMap::detected_count() const {
    return static_cast<std::size_t>(
        std::count_if(first_violation.begin(), first_violation.end(), [](const auto &v) {
            return v.has_value();
        }));
}

RegionMap region_scan(const AxisRange &nbar, const AxisRange &gt, double pe, int max_order, int workers) {
    RegionMap map;
    map.nbar = nbar.values();
    map.gt = gt.values();
    map.first_violation.resize(map.nbar.size() * map.gt.size());
    parallel_for(map.first_violation.size(), workers, [&](std::size_t cell) {
        double nb = map.nbar[cell / map.gt.size()];
        double g = map.gt[cell % map.gt.size()];
        map.first_violation[cell] = klyshko_first_violation(nb, pe, g, max_order);
    });
    return map;
}

}  // namespace jctherm
