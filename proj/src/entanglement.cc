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

#include "jctherm/entanglement.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "jctherm/errors.h"

namespace jctherm {

namespace {

constexpr int kLogFactorialTableSize = 1 << 14;

long double log_factorial(int n) {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(kLogFactorialTableSize);
        t[0] = 0;
        for (int k = 1; k < kLogFactorialTableSize; ++k) {
            t[k] = t[k - 1] + std::log(static_cast<long double>(k));
        }
        return t;
    }();
    if (n < 0 || n >= kLogFactorialTableSize) {
        throw std::out_of_range("log factorial table exceeded at n = " + std::to_string(n));
    }
    return table[n];
}

/// c[n][k] = split_amplitude(n, k) for n < size.
std::vector<std::vector<double>> amplitude_table(int size) {
    std::vector<std::vector<double>> c(size);
    for (int n = 0; n < size; ++n) {
        c[n].resize(n + 1);
        for (int k = 0; k <= n; ++k) {
            c[n][k] = split_amplitude(n, k);
        }
    }
    return c;
}

void accumulate_eigenvalues(const Eigen::VectorXd &eigenvalues, PtSpectrum &out) {
    for (double lambda : eigenvalues) {
        out.trace += lambda;
        out.abs_sum += std::abs(lambda);
        if (lambda < -kEigenvalueClamp) {
            out.negativity += -lambda;
        }
    }
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd &block, const std::string &label) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("symmetric eigensolver did not converge on block " + label);
    }
    return solver.eigenvalues();
}

}  // namespace

TwoModeDensityMatrix::TwoModeDensityMatrix(int dim, Eigen::MatrixXd elements)
    : dim_(dim), elements_(std::move(elements)) {
    if (dim <= 0) {
        throw InvalidDimensionError("two-mode dimension must be positive");
    }
    if (elements_.rows() != dim * dim || elements_.cols() != dim * dim) {
        throw InvalidDimensionError(
            "two-mode matrix for D=" + std::to_string(dim) + " must be " + std::to_string(dim * dim) + " square");
    }
}

double split_amplitude(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    long double log_b = log_factorial(n) - log_factorial(k) - log_factorial(n - k) -
                        static_cast<long double>(n) * std::numbers::ln2_v<long double>;
    return static_cast<double>(std::exp(0.5L * log_b));
}

TwoModeDensityMatrix split_state(const DensityMatrix &rho) {
    if (!rho.is_diagonal()) {
        return split_state_general(rho);
    }
    NumberDistribution p = number_distribution(rho);
    const int d = rho.dim();
    const auto c = amplitude_table(d);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d * d, d * d);
    for (int n = 0; n < d; ++n) {
        if (p[n] == 0) {
            continue;
        }
        for (int k = 0; k <= n; ++k) {
            int row = TwoModeDensityMatrix::index(k, n - k, d);
            for (int kp = 0; kp <= n; ++kp) {
                m(row, TwoModeDensityMatrix::index(kp, n - kp, d)) = p[n] * c[n][k] * c[n][kp];
            }
        }
    }
    return TwoModeDensityMatrix(d, std::move(m));
}

TwoModeDensityMatrix split_state_general(const DensityMatrix &rho) {
    const Eigen::MatrixXcd &e = rho.elements();
    if (e.imag().cwiseAbs().maxCoeff() > kImaginaryPopulationTolerance) {
        throw std::invalid_argument("split_state_general needs real matrix elements");
    }
    const int d = rho.dim();

    // Column n of v is the split image of |n, 0>. In the sector of N total
    // quanta, basis |k, N-k> (k = 0..N), the generator a b^+ - a^+ b is
    // tridiagonal and antisymmetric.
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(d * d, d);
    for (int n = 0; n < d; ++n) {
        Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(n + 1, n + 1);
        for (int k = 1; k <= n; ++k) {
            double amp = std::sqrt(static_cast<double>(k) * static_cast<double>(n - k + 1));
            gen(k - 1, k) = amp;
            gen(k, k - 1) = -amp;
        }
        Eigen::MatrixXd rotation = (std::numbers::pi / 4 * gen).exp();
        for (int k = 0; k <= n; ++k) {
            v(TwoModeDensityMatrix::index(k, n - k, d), n) = rotation(k, n);
        }
    }
    Eigen::MatrixXd m = v * e.real() * v.transpose();
    m = 0.5 * (m + m.transpose()).eval();
    return TwoModeDensityMatrix(d, std::move(m));
}

TwoModeDensityMatrix partial_transpose(const TwoModeDensityMatrix &rho2) {
    const int d = rho2.dim();
    Eigen::MatrixXd out(d * d, d * d);
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
            for (int kp = 0; kp < d; ++kp) {
                for (int lp = 0; lp < d; ++lp) {
                    out(TwoModeDensityMatrix::index(k, l, d), TwoModeDensityMatrix::index(kp, lp, d)) =
                        rho2(k, lp, kp, l);
                }
            }
        }
    }
    return TwoModeDensityMatrix(d, std::move(out));
}

double PtSpectrum::log_negativity() const {
    // log2(trace + 2 * negativity), written with log1p so that values near
    // zero keep their relative accuracy.
    double value = std::log1p((trace - 1.0) + 2.0 * negativity) / std::numbers::ln2;
    return std::isfinite(value) ? std::max(0.0, value) : 0.0;
}

PtSpectrum pt_spectrum(const TwoModeDensityMatrix &rho2, SpectrumMethod method) {
    const int d = rho2.dim();
    const Eigen::MatrixXd pt = partial_transpose(rho2).elements();
    PtSpectrum out;

    bool sectored = method == SpectrumMethod::kBlocked;
    if (sectored) {
        for (int i = 0; i < d * d && sectored; ++i) {
            int sector_i = i / d - i % d;
            for (int j = 0; j < d * d; ++j) {
                if (j / d - j % d != sector_i && std::abs(pt(i, j)) > kSectorLeakTolerance) {
                    sectored = false;
                    break;
                }
            }
        }
    }
    if (!sectored) {
        accumulate_eigenvalues(symmetric_eigenvalues(pt, "full"), out);
        out.blocks = 1;
        return out;
    }

    for (int delta = -(d - 1); delta <= d - 1; ++delta) {
        std::vector<int> members;
        for (int l = 0; l < d; ++l) {
            int k = l + delta;
            if (k >= 0 && k < d) {
                members.push_back(TwoModeDensityMatrix::index(k, l, d));
            }
        }
        const int m = static_cast<int>(members.size());
        Eigen::MatrixXd block(m, m);
        for (int a = 0; a < m; ++a) {
            for (int b = 0; b < m; ++b) {
                block(a, b) = pt(members[a], members[b]);
            }
        }
        accumulate_eigenvalues(symmetric_eigenvalues(block, "k-l=" + std::to_string(delta)), out);
        ++out.blocks;
    }
    return out;
}

double log_negativity(const TwoModeDensityMatrix &rho2) {
    return pt_spectrum(rho2).log_negativity();
}

namespace {

struct SplitSpectrum {
    PtSpectrum spectrum;
    double kept;
};

SplitSpectrum split_spectrum(const NumberDistribution &p, int filter_dim) {
    const int d = static_cast<int>(p.size());
    if (d == 0) {
        throw InvalidDimensionError("empty number distribution");
    }
    if (filter_dim > d) {
        throw std::invalid_argument(
            "filter dimension " + std::to_string(filter_dim) + " exceeds state dimension " + std::to_string(d));
    }
    const int top = filter_dim < 0 ? d - 1 : std::min(filter_dim, d - 1);
    const auto c = amplitude_table(d);

    // Sector k - l = delta >= 0 has members (k, l) = (j + delta, j). The
    // entry between members j and j' is P_N c(N, j+delta) c(N, j'+delta)
    // with N = j + j' + delta; sectors -delta and +delta are mirror images.
    double kept = 0;
    for (int k = 0; k <= top; ++k) {
        for (int l = 0; l <= top && k + l < d; ++l) {
            kept += p[k + l] * c[k + l][k] * c[k + l][k];
        }
    }
    double scale = 1.0;
    if (filter_dim >= 0) {
        if (kept < 1e-15) {
            throw EmptyFilterError("filter keeps probability " + std::to_string(kept));
        }
        scale = 1.0 / kept;
    }

    PtSpectrum out;
    for (int delta = 0; delta <= top; ++delta) {
        const int m = top - delta + 1;
        Eigen::MatrixXd block = Eigen::MatrixXd::Zero(m, m);
        for (int j = 0; j < m; ++j) {
            for (int jp = 0; jp < m; ++jp) {
                int n = j + jp + delta;
                if (n < d) {
                    block(j, jp) = scale * p[n] * c[n][j + delta] * c[n][jp + delta];
                }
            }
        }
        Eigen::VectorXd ev = symmetric_eigenvalues(block, "k-l=" + std::to_string(delta));
        PtSpectrum part;
        accumulate_eigenvalues(ev, part);
        double mult = delta == 0 ? 1.0 : 2.0;
        out.trace += mult * part.trace;
        out.abs_sum += mult * part.abs_sum;
        out.negativity += mult * part.negativity;
        out.blocks += delta == 0 ? 1 : 2;
    }
    return SplitSpectrum{out, kept};
}

}  // namespace

PtSpectrum split_pt_spectrum(const NumberDistribution &p, int filter_dim) {
    return split_spectrum(p, filter_dim).spectrum;
}

double lnp(const NumberDistribution &p) {
    return split_pt_spectrum(p).log_negativity();
}

double lnp(const DensityMatrix &rho) {
    if (rho.is_diagonal()) {
        return lnp(number_distribution(rho));
    }
    return log_negativity(split_state(rho));
}

double lnp_ground_closed_form(double pe, double gt) {
    if (!(pe >= 0 && pe <= 0.5)) {
        throw std::invalid_argument("pe must lie in [0, 1/2]");
    }
    double s = std::sin(gt);
    double q = pe * s * s;
    double negativity_sum = std::sqrt((1 - q) * (1 - q) + q * q) - (1 - q);
    return std::log1p(negativity_sum) / std::numbers::ln2;
}

FilteredState filter_project(const TwoModeDensityMatrix &rho2, int filter_dim) {
    const int d = rho2.dim();
    if (filter_dim < 0 || filter_dim > d) {
        throw std::invalid_argument("filter dimension must lie in [0, " + std::to_string(d) + "]");
    }
    Eigen::MatrixXd m = rho2.elements();
    for (int i = 0; i < d * d; ++i) {
        if (i / d > filter_dim || i % d > filter_dim) {
            m.row(i).setZero();
            m.col(i).setZero();
        }
    }
    double kept = m.trace();
    if (!(kept >= 1e-15)) {
        throw EmptyFilterError("filter keeps probability " + std::to_string(kept));
    }
    m /= kept;
    return FilteredState{TwoModeDensityMatrix(d, std::move(m)), kept};
}

FilteredLnp lnp_filtered(const NumberDistribution &p, int filter_dim) {
    if (filter_dim < 0) {
        throw std::invalid_argument("filter dimension must be non-negative");
    }
    SplitSpectrum result = split_spectrum(p, filter_dim);
    return FilteredLnp{result.spectrum.log_negativity(), result.kept};
}

}  // namespace jctherm
