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

#include "jctherm/ion_experiment.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "jctherm/errors.h"
#include "jctherm/jc_dynamics.h"
#include "jctherm/parallel.h"

namespace jctherm {

void MeasurementModel::validate() const {
    if (!(sigma >= 0 && sigma <= kMaxSigma)) {
        throw std::invalid_argument("sigma must lie in [0, " + std::to_string(kMaxSigma) + "], got " +
                                    std::to_string(sigma));
    }
    if (populations < 3) {
        throw std::invalid_argument("at least 3 measured populations are needed, got " +
                                    std::to_string(populations));
    }
    if (orders.empty()) {
        throw std::invalid_argument("no criterion orders selected");
    }
    for (int n : orders) {
        if (!measurable(n)) {
            throw UnmeasurableOrderError("order " + std::to_string(n) + " needs P_0..P_" + std::to_string(n + 1) +
                                         " but only " + std::to_string(populations) + " populations are measured");
        }
    }
}

double worst_case_klyshko(const NumberDistribution &p, const MeasurementModel &model, int order) {
    if (!model.measurable(order)) {
        throw UnmeasurableOrderError("order " + std::to_string(order) + " is outside the " +
                                     std::to_string(model.populations) + " measured populations");
    }
    if (p.size() < static_cast<std::size_t>(order) + 2) {
        throw IndexError("order " + std::to_string(order) + " needs " + std::to_string(order + 2) +
                         " populations, have " + std::to_string(p.size()));
    }
    const double s = model.sigma;
    const double n = order;
    double lo = std::min(p[order - 1] + s, 1.0);
    double hi = std::min(p[order + 1] + s, 1.0);
    double mid = std::max(p[order] - s, 0.0);
    return (n + 1) * lo * hi - n * mid * mid;
}

std::optional<int> robust_first_violation(const NumberDistribution &p, const MeasurementModel &model) {
    std::vector<int> orders = model.orders;
    std::sort(orders.begin(), orders.end());
    for (int n : orders) {
        double v = worst_case_klyshko(p, model, n);
        if (model.sigma == 0) {
            if (is_violation(v, klyshko_scale(p, n))) {
                return n;
            }
        } else if (v < 0) {
            return n;
        }
    }
    return std::nullopt;
}

int robust_dim(double nbar, const MeasurementModel &model) {
    int top = *std::max_element(model.orders.begin(), model.orders.end());
    return std::max({required_dim(nbar, kDefaultTailTolerance), model.populations + 2, top + 3});
}

RegionMap robust_region_scan(const AxisRange &nbar, const AxisRange &gt, const MeasurementModel &model,
                             int workers) {
    model.validate();
    RegionMap map;
    map.nbar = nbar.values();
    map.gt = gt.values();
    map.first_violation.resize(map.nbar.size() * map.gt.size());
    parallel_for(map.first_violation.size(), workers, [&](std::size_t cell) {
        double nb = map.nbar[cell / map.gt.size()];
        double g = map.gt[cell % map.gt.size()];
        NumberDistribution p = output_number_stats(nb, 0.0, g, robust_dim(nb, model));
        map.first_violation[cell] = robust_first_violation(p, model);
    });
    return map;
}

}  // namespace jctherm
