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

#ifndef JCTHERM_JC_DYNAMICS_H
#define JCTHERM_JC_DYNAMICS_H

#include <Eigen/Dense>

#include "jctherm/fock.h"

namespace jctherm {

/// Maximum 1 - Tr(rho) accepted by the Kraus map.
constexpr double kMaxInputLeakage = 1e-6;

/// Oscillator blocks of the resonant Jaynes-Cummings unitary
///
///     U = A_gg (x) |g><g| + A_ee (x) |e><e| + A_eg (x) |e><g| + A_ge (x) |g><e|
///
/// at pulse area gt, built on a workspace of dim+1 levels so the creation
/// block never pushes population off the edge of a dim-level input.
/// All entries are real in the Fock basis.
struct KrausSet {
    double gt = 0;
    int dim = 0;
    Eigen::MatrixXd a_gg;  ///< cos(gt sqrt(n)), diagonal
    Eigen::MatrixXd a_eg;  ///< <n-1|a_eg|n> = sin(gt sqrt(n)), absorbs a quantum
    Eigen::MatrixXd a_ee;  ///< cos(gt sqrt(n+1)), diagonal
    Eigen::MatrixXd a_ge;  ///< <n+1|a_ge|n> = -sin(gt sqrt(n+1)), emits a quantum

    int workspace_dim() const {
        return dim + 1;
    }
};

KrausSet kraus_set(double gt, int dim);

/// Oscillator state after one resonant interaction with a thermal two-level
/// system of excitation pe, the two-level system traced out:
///
///     rho' = (1-pe) [A_gg rho A_gg^T + A_eg rho A_eg^T]
///          +    pe  [A_ee rho A_ee^T + A_ge rho A_ge^T]
///
/// Output dimension is rho.dim() + 1. Throws TruncationError when the input
/// has leaked more than kMaxInputLeakage of its trace.
DensityMatrix apply_jc(const DensityMatrix &rho, double pe, double gt);

/// Same map with a prebuilt Kraus set (kraus.dim must equal rho.dim()).
DensityMatrix apply_jc(const DensityMatrix &rho, double pe, const KrausSet &kraus);

/// Diagonal fast path of apply_jc acting on populations only. The output has
/// in.size() + 1 entries:
///
///     P'(n) = (1-pe) [cos^2(gt sqrt n) P(n) + sin^2(gt sqrt(n+1)) P(n+1)]
///           +    pe  [cos^2(gt sqrt(n+1)) P(n) + sin^2(gt sqrt n) P(n-1)]
NumberDistribution jc_number_stats(const NumberDistribution &in, double pe, double gt);

/// Populations of apply_jc(thermal_state(nbar, dim), pe, gt) in closed form;
/// dim + 1 entries.
NumberDistribution output_number_stats(double nbar, double pe, double gt, int dim);

/// `repeats` interactions with fresh ground-state two-level systems. The
/// first interaction grows the space to rho.dim()+1; later ones are trimmed
/// back to that size since absorption only removes quanta.
DensityMatrix repeat_absorption(const DensityMatrix &rho, double gt, int repeats);

NumberDistribution repeat_absorption(const NumberDistribution &in, double gt, int repeats);

}  // namespace jctherm

#endif
