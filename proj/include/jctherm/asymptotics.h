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

#ifndef JCTHERM_ASYMPTOTICS_H
#define JCTHERM_ASYMPTOTICS_H

#include <array>
#include <optional>

namespace jctherm {

/// cos^2(gt sqrt(n)) + sin^2(gt sqrt(n+1)). Large-nbar output populations
/// behave as P_n ~ F_n / nbar.
double modulation_factor(double gt, int n);

/// n a_n^2 - (n+1) a_{n-1} a_{n+1} with a_m = 2 pe + F_m (1 - 2 pe).
/// Positive values mean order n detects nonclassicality as nbar grows.
double asymptotic_criterion(double gt, int n, double pe);

/// sqrt(n^2 + n) - n.
double pe_bound(int n);

/// Largest pe in [0, 1/2] at which asymptotic_criterion(gt, n, .) vanishes,
/// bisected to 1e-9, or nullopt when the criterion is nowhere positive.
std::optional<double> max_detectable_pe(double gt, int n);

struct GtInterval {
    double lo;
    double hi;
};

struct AsymptoticResult {
    int order = 0;
    double gt_star = 0;
    double pe_star = 0;
    double bound = 0;
    bool detected = false;
    /// (F_{n-1}, F_n, F_{n+1}) at gt_star.
    std::array<double, 3> f_triple{};
};

/// Maximizes max_detectable_pe over gt: a grid at the given resolution,
/// golden-section refinement to 1e-6 around each local maximum, and an extra
/// seed at gt = pi sqrt(n).
AsymptoticResult search_max_pe(int n, GtInterval range, double resolution = 1e-3);

}  // namespace jctherm

#endif
