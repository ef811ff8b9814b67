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

#ifndef JCTHERM_FOCK_H
#define JCTHERM_FOCK_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace jctherm {

/// Tail weight below which the thermal distribution is cut off for
/// number-statistics work.
constexpr double kDefaultTailTolerance = 1e-9;

/// Cutoff used when a logarithmic negativity is computed. A hard cut at
/// 1e-9 leaves a truncation edge with ~5e-9 of spurious negativity; at
/// 1e-12 the edge falls under the eigenvalue clamp.
constexpr double kEntanglementTailTolerance = 1e-12;

constexpr double kHermiticityTolerance = 1e-12;
constexpr double kTraceExcessTolerance = 1e-12;
constexpr double kPositivityTolerance = 1e-10;
constexpr double kImaginaryPopulationTolerance = 1e-12;
constexpr double kNegativeProbabilityClamp = 1e-14;

/// Single-mode state in the truncated Fock basis |0>..|dim-1>.
///
/// The container holds whatever matrix it is given (square, nonempty);
/// physical validity is reported by `validate` rather than enforced, so
/// that broken states can be diagnosed. Trace below one is truncation
/// leakage and is never renormalized away.
class DensityMatrix {
   public:
    explicit DensityMatrix(Eigen::MatrixXcd elements);

    static DensityMatrix diagonal(std::span<const double> populations);
    static DensityMatrix fock(int n, int dim);

    int dim() const {
        return static_cast<int>(elements_.rows());
    }
    const Eigen::MatrixXcd &elements() const {
        return elements_;
    }
    std::complex<double> operator()(int row, int col) const {
        return elements_(row, col);
    }
    double trace() const {
        return elements_.trace().real();
    }
    /// True when every off-diagonal magnitude is <= tol.
    bool is_diagonal(double tol = 0.0) const;

   private:
    Eigen::MatrixXcd elements_;
};

/// Probabilities P_n of finding n excitations.
///
/// Entries in [-1e-14, 0) are clamped to zero on construction. Anything
/// more negative, non-finite, or a total above 1 + 1e-12 throws
/// CorruptedStateError.
class NumberDistribution {
   public:
    NumberDistribution() = default;
    explicit NumberDistribution(std::vector<double> probs);

    std::size_t size() const {
        return probs_.size();
    }
    double operator[](std::size_t n) const {
        return probs_[n];
    }
    /// P_n, or 0 past the end.
    double at_or_zero(std::size_t n) const {
        return n < probs_.size() ? probs_[n] : 0.0;
    }
    std::span<const double> probs() const {
        return probs_;
    }
    double total() const;
    double mean() const;

   private:
    std::vector<double> probs_;
};

/// Thermal inputs collapsed to two numbers. A physical temperature maps
/// onto them as nbar = 1/(exp(hbar*nu/(kB*T1)) - 1) for the oscillator and
/// pe = exp(-hbar*omega/(kB*T2)) / (1 + exp(-hbar*omega/(kB*T2))) for the
/// two-level system.
class ThermalParams {
   public:
    ThermalParams(double nbar, double pe);

    double nbar() const {
        return nbar_;
    }
    double pe() const {
        return pe_;
    }

   private:
    double nbar_;
    double pe_;
};

/// nbar^n / (1+nbar)^(n+1).
double thermal_weight(double nbar, int n);

/// Bose-Einstein diagonal state truncated to `dim` levels (no
/// renormalization).
DensityMatrix thermal_state(double nbar, int dim);

/// Thermal populations for levels 0..dim-1.
NumberDistribution thermal_distribution(double nbar, int dim);

/// Smallest D >= 2 with (nbar/(1+nbar))^D < tail_tol.
int required_dim(double nbar, double tail_tol = kDefaultTailTolerance);

NumberDistribution number_distribution(const DensityMatrix &rho);

struct ValidationReport {
    double hermiticity_deviation = 0;
    double trace = 0;
    double min_eigenvalue = 0;
    double leakage = 0;
    bool hermitian = false;
    bool trace_ok = false;
    bool positive = false;

    bool ok() const {
        return hermitian && trace_ok && positive;
    }
};

ValidationReport validate(const DensityMatrix &rho);

/// Two-level excitation that is in equilibrium with an oscillator of mean
/// excitation nbar: nbar / (1 + 2 nbar).
double equilibrium_pe(double nbar);

}  // namespace jctherm

#endif
