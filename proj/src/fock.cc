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

#include "jctherm/fock.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "jctherm/errors.h"

namespace jctherm {

namespace {

void require_nbar(double nbar) {
    if (!std::isfinite(nbar) || nbar < 0) {
        throw std::invalid_argument("nbar must be finite and non-negative, got " + std::to_string(nbar));
    }
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd elements) : elements_(std::move(elements)) {
    if (elements_.rows() == 0 || elements_.rows() != elements_.cols()) {
        throw InvalidDimensionError(
            "density matrix must be square and nonempty, got " + std::to_string(elements_.rows()) + "x" +
            std::to_string(elements_.cols()));
    }
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> populations) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(populations.size(), populations.size());
    for (std::size_t n = 0; n < populations.size(); ++n) {
        m(n, n) = populations[n];
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::fock(int n, int dim) {
    if (dim <= 0) {
        throw InvalidDimensionError("dimension must be positive");
    }
    if (n < 0 || n >= dim) {
        throw std::invalid_argument("Fock level " + std::to_string(n) + " outside dimension " + std::to_string(dim));
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    m(n, n) = 1.0;
    return DensityMatrix(std::move(m));
}

bool DensityMatrix::is_diagonal(double tol) const {
    for (Eigen::Index c = 0; c < elements_.cols(); ++c) {
        for (Eigen::Index r = 0; r < elements_.rows(); ++r) {
            if (r != c && std::abs(elements_(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

NumberDistribution::NumberDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    double sum = 0;
    for (std::size_t n = 0; n < probs_.size(); ++n) {
        double &p = probs_[n];
        if (!std::isfinite(p) || p < -kNegativeProbabilityClamp) {
            std::ostringstream msg;
            msg << "invalid probability P_" << n << " = " << p;
            throw CorruptedStateError(msg.str());
        }
        if (p < 0) {
            p = 0;
        }
        sum += p;
    }
    if (sum > 1 + kTraceExcessTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "number distribution sums to " << sum << " > 1";
        throw CorruptedStateError(msg.str());
    }
}

double NumberDistribution::total() const {
    double s = 0;
    for (double p : probs_) {
        s += p;
    }
    return s;
}

double NumberDistribution::mean() const {
    double s = 0;
    for (std::size_t n = 0; n < probs_.size(); ++n) {
        s += static_cast<double>(n) * probs_[n];
    }
    return s;
}

ThermalParams::ThermalParams(double nbar, double pe) : nbar_(nbar), pe_(pe) {
    require_nbar(nbar);
    if (!(pe >= 0 && pe <= 0.5)) {
        throw std::invalid_argument("pe must lie in [0, 1/2], got " + std::to_string(pe));
    }
}

double thermal_weight(double nbar, int n) {
    // Extended precision keeps the n-fold amplification of the rounding
    // in nbar/(1+nbar) below 1e-15 for n up to ~10^4.
    long double x = nbar;
    long double r = x / (1.0L + x);
    return static_cast<double>(std::pow(r, static_cast<long double>(n)) / (1.0L + x));
}

NumberDistribution thermal_distribution(double nbar, int dim) {
    require_nbar(nbar);
    if (dim <= 0) {
        throw InvalidDimensionError("dimension must be positive, got " + std::to_string(dim));
    }
    std::vector<double> probs(dim);
    for (int n = 0; n < dim; ++n) {
        probs[n] = thermal_weight(nbar, n);
    }
    return NumberDistribution(std::move(probs));
}

DensityMatrix thermal_state(double nbar, int dim) {
    NumberDistribution p = thermal_distribution(nbar, dim);
    return DensityMatrix::diagonal(p.probs());
}

int required_dim(double nbar, double tail_tol) {
    require_nbar(nbar);
    if (!(tail_tol > 0 && tail_tol < 1)) {
        throw std::invalid_argument("tail tolerance must lie in (0, 1)");
    }
    long double x = nbar;
    long double r = x / (1.0L + x);
    if (r == 0) {
        return 2;
    }
    long double guess = std::ceil(std::log(static_cast<long double>(tail_tol)) / std::log(r));
    if (!(guess < static_cast<long double>(std::numeric_limits<int>::max() / 4))) {
        throw std::invalid_argument("nbar too large for a dense Fock cutoff");
    }
    int d = std::max(1, static_cast<int>(guess));
    auto tail = [&](int k) {
        return std::pow(r, static_cast<long double>(k));
    };
    while (tail(d) >= tail_tol) {
        ++d;
    }
    while (d > 1 && tail(d - 1) < tail_tol) {
        --d;
    }
    return std::max(d, 2);
}

NumberDistribution number_distribution(const DensityMatrix &rho) {
    std::vector<double> probs(rho.dim());
    for (int n = 0; n < rho.dim(); ++n) {
        std::complex<double> v = rho(n, n);
        if (std::abs(v.imag()) >= kImaginaryPopulationTolerance) {
            std::ostringstream msg;
            msg << "population " << n << " has imaginary part " << v.imag();
            throw CorruptedStateError(msg.str());
        }
        probs[n] = v.real();
    }
    return NumberDistribution(std::move(probs));
}

ValidationReport validate(const DensityMatrix &rho) {
    const Eigen::MatrixXcd &m = rho.elements();
    ValidationReport report;
    report.hermiticity_deviation = (m - m.adjoint()).cwiseAbs().maxCoeff();
    report.trace = rho.trace();
    report.leakage = 1.0 - report.trace;

    if (rho.is_diagonal()) {
        report.min_eigenvalue = m.diagonal().real().minCoeff();
    } else {
        Eigen::MatrixXcd hermitian_part = 0.5 * (m + m.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_part, Eigen::EigenvaluesOnly);
        report.min_eigenvalue = solver.info() == Eigen::Success ? solver.eigenvalues().minCoeff()
                                                                : std::numeric_limits<double>::quiet_NaN();
    }

    report.hermitian = report.hermiticity_deviation <= kHermiticityTolerance;
    report.trace_ok = report.trace > 0 && report.trace <= 1 + kTraceExcessTolerance &&
                      std::abs(m.trace().imag()) <= kHermiticityTolerance;
    report.positive = report.min_eigenvalue >= -kPositivityTolerance;
    return report;
}

double equilibrium_pe(double nbar) {
    require_nbar(nbar);
    return nbar / (1 + 2 * nbar);
}

}  // namespace jctherm
