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

#ifndef JCTHERM_ENTANGLEMENT_H
#define JCTHERM_ENTANGLEMENT_H

#include <Eigen/Dense>

#include "jctherm/fock.h"

namespace jctherm {

/// Eigenvalues of the partial transpose above -kEigenvalueClamp count as 0.
constexpr double kEigenvalueClamp = 1e-12;

/// Off-sector magnitude up to which a partial transpose is treated as block
/// diagonal in k-l.
constexpr double kSectorLeakTolerance = 1e-14;

/// Real symmetric two-mode state on D levels per mode. Row/column index
/// k*D + l addresses |k>_a |l>_b.
class TwoModeDensityMatrix {
   public:
    TwoModeDensityMatrix(int dim, Eigen::MatrixXd elements);

    int dim() const {
        return dim_;
    }
    const Eigen::MatrixXd &elements() const {
        return elements_;
    }
    static int index(int k, int l, int dim) {
        return k * dim + l;
    }
    double operator()(int k, int l, int kp, int lp) const {
        return elements_(index(k, l, dim_), index(kp, lp, dim_));
    }
    double trace() const {
        return elements_.trace();
    }

   private:
    int dim_;
    Eigen::MatrixXd elements_;
};

/// sqrt(C(n,k) / 2^n): amplitude of |k, n-k> in a balanced split of |n, 0>.
double split_amplitude(int n, int k);

/// rho (x) |0><0| through the balanced two-mode rotation exp(pi/4 (a b^+ - a^+ b)).
/// Diagonal inputs use the binomial amplitudes directly; anything else goes
/// through split_state_general.
TwoModeDensityMatrix split_state(const DensityMatrix &rho);

/// Split via the matrix exponential of the rotation generator, one
/// total-quanta sector at a time. Needs real matrix elements.
TwoModeDensityMatrix split_state_general(const DensityMatrix &rho);

/// Transpose on mode b: <k,l|out|k',l'> = <k,l'|in|k',l>.
TwoModeDensityMatrix partial_transpose(const TwoModeDensityMatrix &rho2);

struct PtSpectrum {
    double trace = 0;        ///< sum of eigenvalues (= trace of the state)
    double negativity = 0;   ///< sum of |lambda| over lambda < -kEigenvalueClamp
    double abs_sum = 0;      ///< sum of |lambda| over all eigenvalues, unclamped
    int blocks = 0;          ///< number of eigensolves performed

    /// log2 of the trace norm, floored at zero.
    double log_negativity() const;
};

enum class SpectrumMethod { kBlocked, kDense };

/// Spectrum of the partial transpose of rho2. kBlocked solves each k-l
/// sector separately when the matrix is sector-diagonal (falls back to one
/// dense solve otherwise); kDense always does one full solve.
PtSpectrum pt_spectrum(const TwoModeDensityMatrix &rho2, SpectrumMethod method = SpectrumMethod::kBlocked);

/// log2 || rho2^PT ||_1.
double log_negativity(const TwoModeDensityMatrix &rho2);

/// Split-state partial-transpose spectrum of a diagonal state built straight
/// from its populations, never forming the D^2 x D^2 matrix. With
/// filter_dim >= 0 only levels 0..filter_dim of each mode are kept and the
/// blocks are renormalized by the surviving trace.
PtSpectrum split_pt_spectrum(const NumberDistribution &p, int filter_dim = -1);

/// Logarithmic negativity potential: log_negativity(split_state(rho)).
double lnp(const DensityMatrix &rho);
double lnp(const NumberDistribution &p);

/// Exact logarithmic negativity potential of
/// (1 - q)|0><0| + q|1><1|, q = pe sin^2(gt), the oscillator output when it
/// starts in the ground state.
double lnp_ground_closed_form(double pe, double gt);

struct FilteredState {
    TwoModeDensityMatrix state;
    double success_probability;
};

/// Local scissors F (x) F with F = sum_{k=0}^{filter_dim} |k><k|, then
/// renormalized. Throws EmptyFilterError when less than 1e-15 survives.
FilteredState filter_project(const TwoModeDensityMatrix &rho2, int filter_dim);

struct FilteredLnp {
    double lnp;
    double success_probability;
};

/// lnp of the filtered split state of a diagonal state (structured path).
FilteredLnp lnp_filtered(const NumberDistribution &p, int filter_dim);

}  // namespace jctherm

#endif
