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

#include "jctherm/asymptotics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace jctherm {

namespace {

constexpr double kBisectionTolerance = 1e-9;
constexpr double kGoldenTolerance = 1e-6;

void require_order(int n) {
    if (n < 1) {
        throw std::invalid_argument("asymptotic order must be >= 1, got " + std::to_string(n));
    }
}

// Criterion as a quadratic c2 pe^2 + c1 pe + c0.
struct Quadratic {
    double c2, c1, c0;

    double operator()(double x) const {
        return (c2 * x + c1) * x + c0;
    }
};

Quadratic criterion_quadratic(double gt, int n) {
    // a_m = F_m + pe (2 - 2 F_m)
    double f_lo = modulation_factor(gt, n - 1);
    double f_mid = modulation_factor(gt, n);
    double f_hi = modulation_factor(gt, n + 1);
    double s_lo = 2 - 2 * f_lo;
    double s_mid = 2 - 2 * f_mid;
    double s_hi = 2 - 2 * f_hi;
    Quadratic q;
    q.c2 = n * s_mid * s_mid - (n + 1) * s_lo * s_hi;
    q.c1 = 2 * n * f_mid * s_mid - (n + 1) * (f_lo * s_hi + f_hi * s_lo);
    q.c0 = n * f_mid * f_mid - (n + 1) * f_lo * f_hi;
    return q;
}

// -1 encodes "no detection" so the objective stays ordered.
double objective(double gt, int n) {
    auto pe = max_detectable_pe(gt, n);
    return pe ? *pe : -1.0;
}

double golden_max(int n, double a, double b) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = objective(c, n);
    double fd = objective(d, n);
    while (b - a > kGoldenTolerance) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c, n);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d, n);
        }
    }
    return fc >= fd ? c : d;
}

}  // namespace

double modulation_factor(double gt, int n) {
    double c = std::cos(gt * std::sqrt(static_cast<double>(n)));
    double s = std::sin(gt * std::sqrt(static_cast<double>(n + 1)));
    return c * c + s * s;
}

double asymptotic_criterion(double gt, int n, double pe) {
    require_order(n);
    auto a = [&](int m) {
        return 2 * pe + modulation_factor(gt, m) * (1 - 2 * pe);
    };
    double a_mid = a(n);
    return n * a_mid * a_mid - (n + 1) * a(n - 1) * a(n + 1);
}

double pe_bound(int n) {
    require_order(n);
    double nn = n;
    return std::sqrt(nn * nn + nn) - nn;
}

std::optional<double> max_detectable_pe(double gt, int n) {
    require_order(n);
    Quadratic q = criterion_quadratic(gt, n);
    // The criterion equals -1 at pe = 1/2, so the root sits between the
    // maximizer on [0, 1/2] and 1/2, where the quadratic is monotone.
    double peak = 0;
    if (q.c2 < 0) {
        peak = std::clamp(-q.c1 / (2 * q.c2), 0.0, 0.5);
    } else if (q(0.5) > q(0.0)) {
        peak = 0.5;
    }
    if (!(q(peak) > 0)) {
        return std::nullopt;
    }
    double lo = peak;
    double hi = 0.5;
    while (hi - lo > kBisectionTolerance) {
        double mid = 0.5 * (lo + hi);
        if (asymptotic_criterion(gt, n, mid) > 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

AsymptoticResult search_max_pe(int n, GtInterval range, double resolution) {
    require_order(n);
    if (!(range.hi > range.lo) || !std::isfinite(range.lo) || !std::isfinite(range.hi)) {
        throw std::invalid_argument("gt range must be a nonempty finite interval");
    }
    if (!(resolution > 0)) {
        throw std::invalid_argument("resolution must be positive");
    }

    std::size_t steps = static_cast<std::size_t>(std::floor((range.hi - range.lo) / resolution + 1e-9));
    std::vector<double> grid(steps + 1);
    std::vector<double> values(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        grid[i] = range.lo + static_cast<double>(i) * resolution;
        values[i] = objective(grid[i], n);
    }

    AsymptoticResult best;
    best.order = n;
    best.bound = pe_bound(n);
    double best_value = -1;
    auto consider = [&](double gt) {
        double v = objective(gt, n);
        if (v > best_value) {
            best_value = v;
            best.gt_star = gt;
        }
    };

    for (std::size_t i = 0; i <= steps; ++i) {
        if (values[i] < 0) {
            continue;
        }
        bool left_ok = i == 0 || values[i] >= values[i - 1];
        bool right_ok = i == steps || values[i] >= values[i + 1];
        if (!left_ok || !right_ok) {
            continue;
        }
        consider(grid[i]);
        double a = i == 0 ? grid[i] : grid[i - 1];
        double b = i == steps ? grid[i] : grid[i + 1];
        if (b > a) {
            consider(golden_max(n, a, b));
        }
    }
    double seed = std::numbers::pi * std::sqrt(static_cast<double>(n));
    if (seed >= range.lo && seed <= range.hi) {
        consider(seed);
        double a = std::max(range.lo, seed - resolution);
        double b = std::min(range.hi, seed + resolution);
        consider(golden_max(n, a, b));
    }

    if (best_value >= 0) {
        best.detected = true;
        best.pe_star = best_value;
        best.f_triple = {modulation_factor(best.gt_star, n - 1), modulation_factor(best.gt_star, n),
                         modulation_factor(best.gt_star, n + 1)};
    } else {
        best.gt_star = 0;
    }
    return best;
}

}  // namespace jctherm
