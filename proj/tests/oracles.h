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

// Reference computations that share no code with the library: full-space
// matrix exponentials, explicit index loops and long double formulas.

#ifndef JCTHERM_TESTS_ORACLES_H
#define JCTHERM_TESTS_ORACLES_H

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

inline long double thermal(long double nbar, int n) {
    if (nbar == 0) {
        return n == 0 ? 1.0L : 0.0L;
    }
    return std::exp(n * std::log(nbar) - (n + 1) * std::log1p(nbar));
}

inline std::vector<double> poisson(double mean, int size) {
    std::vector<double> p(size);
    long double term = std::exp(-static_cast<long double>(mean));
    for (int n = 0; n < size; ++n) {
        p[n] = static_cast<double>(term);
        term *= static_cast<long double>(mean) / (n + 1);
    }
    return p;
}

/// Oscillator state after exp(-i gt (a s+ + a^+ s-)) acting on
/// rho (x) [(1-pe)|g><g| + pe|e><e|], two-level system traced out.
/// Levels 0..rho.rows() are kept so one emitted quantum fits.
inline Eigen::MatrixXcd jc_channel(const Eigen::MatrixXcd &rho, double pe, double gt) {
    const int d = static_cast<int>(rho.rows()) + 1;
    const int size = 2 * d;  // index 2n + s, s = 0 ground, 1 excited
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(size, size);
    for (int n = 0; n + 1 < d; ++n) {
        // a^+ s-: |n, e> -> sqrt(n+1) |n+1, g>
        h(2 * (n + 1), 2 * n + 1) = std::sqrt(n + 1.0);
        h(2 * n + 1, 2 * (n + 1)) = std::sqrt(n + 1.0);
    }
    Eigen::MatrixXcd u = (std::complex<double>(0, -gt) * h).exp();
    Eigen::MatrixXcd in = Eigen::MatrixXcd::Zero(size, size);
    for (int r = 0; r < rho.rows(); ++r) {
        for (int c = 0; c < rho.cols(); ++c) {
            in(2 * r, 2 * c) = (1 - pe) * rho(r, c);
            in(2 * r + 1, 2 * c + 1) = pe * rho(r, c);
        }
    }
    Eigen::MatrixXcd out = u * in * u.adjoint();
    Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Zero(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            reduced(r, c) = out(2 * r, 2 * c) + out(2 * r + 1, 2 * c + 1);
        }
    }
    return reduced;
}

/// rho (x) |0><0| through exp(pi/4 (a b^+ - a^+ b)) on a two-mode space
/// large enough to hold every total-quanta sector, returned on the
/// D x D per-mode grid, index k*D + l.
inline Eigen::MatrixXd beam_split(const Eigen::MatrixXd &rho) {
    const int d = static_cast<int>(rho.rows());
    const int big = 2 * d;
    const int size = big * big;
    auto idx = [big](int k, int l) { return k * big + l; };
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(size, size);
    for (int k = 0; k < big; ++k) {
        for (int l = 0; l < big; ++l) {
            // a b^+ |k,l> = sqrt(k (l+1)) |k-1, l+1>
            if (k >= 1 && l + 1 < big) {
                gen(idx(k - 1, l + 1), idx(k, l)) += std::sqrt(k * (l + 1.0));
            }
            // a^+ b |k,l> = sqrt((k+1) l) |k+1, l-1>
            if (l >= 1 && k + 1 < big) {
                gen(idx(k + 1, l - 1), idx(k, l)) -= std::sqrt((k + 1.0) * l);
            }
        }
    }
    Eigen::MatrixXd b = (M_PI / 4 * gen).exp();
    Eigen::MatrixXd in = Eigen::MatrixXd::Zero(size, size);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            in(idx(r, 0), idx(c, 0)) = rho(r, c);
        }
    }
    Eigen::MatrixXd out = b * in * b.transpose();
    Eigen::MatrixXd small(d * d, d * d);
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
            for (int kp = 0; kp < d; ++kp) {
                for (int lp = 0; lp < d; ++lp) {
                    small(k * d + l, kp * d + lp) = out(idx(k, l), idx(kp, lp));
                }
            }
        }
    }
    return small;
}

/// Eigenvalues of the mode-b partial transpose, one dense solve.
inline Eigen::VectorXd pt_eigenvalues(const Eigen::MatrixXd &rho2, int d) {
    Eigen::MatrixXd pt(d * d, d * d);
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
            for (int kp = 0; kp < d; ++kp) {
                for (int lp = 0; lp < d; ++lp) {
                    pt(k * d + l, kp * d + lp) = rho2(k * d + lp, kp * d + l);
                }
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(pt, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

/// log2 of the trace norm of the partial transpose, floored at 0.
inline double log_negativity(const Eigen::MatrixXd &rho2, int d) {
    Eigen::VectorXd ev = pt_eigenvalues(rho2, d);
    double sum = 0;
    for (double x : ev) {
        sum += x < -1e-12 ? -x : (x < 0 ? 0.0 : x);
    }
    return std::max(0.0, std::log2(sum));
}

inline Eigen::MatrixXcd random_state(std::mt19937_64 &rng, int d, bool real) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd g(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            g(r, c) = {normal(rng), real ? 0.0 : normal(rng)};
        }
    }
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

inline std::vector<double> random_probs(std::mt19937_64 &rng, int size) {
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<double> p(size);
    double sum = 0;
    for (auto &x : p) {
        x = u(rng);
        sum += x;
    }
    for (auto &x : p) {
        x /= sum;
    }
    return p;
}

}  // namespace oracle

#endif
