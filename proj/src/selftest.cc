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

#include "jctherm/selftest.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jctherm/asymptotics.h"
#include "jctherm/entanglement.h"
#include "jctherm/fock.h"
#include "jctherm/ion_experiment.h"
#include "jctherm/jc_dynamics.h"
#include "jctherm/klyshko.h"
#include "jctherm/sweep.h"

namespace jctherm {

namespace {

using Rng = std::mt19937_64;

class Battery {
   public:
    explicit Battery(std::ostream &out) : out_(out) {
    }

    // body returns true on success and may write a short detail string.
    void run(const std::string &module, const std::string &name, const std::function<bool(std::ostream &)> &body) {
        std::ostringstream detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception &e) {
            detail << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        (ok ? summary_.passed : summary_.failed)++;
        out_ << (ok ? "PASS " : "FAIL ") << module << "/" << name << " (" << format_real(std::round(secs * 100) / 100)
             << " s)";
        if (!detail.str().empty()) {
            out_ << ": " << detail.str();
        }
        out_ << "\n" << std::flush;
    }

    SelftestSummary summary() const {
        return summary_;
    }

   private:
    std::ostream &out_;
    SelftestSummary summary_;
};

DensityMatrix random_state(Rng &rng, int dim, bool real) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd g(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            g(r, c) = real ? std::complex<double>(normal(rng), 0) : std::complex<double>(normal(rng), normal(rng));
        }
    }
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(rho);
}

std::vector<double> random_probs(Rng &rng, int size) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
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

std::vector<double> poisson_mixture(const std::vector<double> &means, const std::vector<double> &weights, int size) {
    std::vector<double> p(size, 0.0);
    for (std::size_t i = 0; i < means.size(); ++i) {
        long double mu = means[i];
        long double term = std::exp(-mu);
        for (int n = 0; n < size; ++n) {
            p[n] += static_cast<double>(weights[i] * term);
            term *= mu / (n + 1);
        }
    }
    return p;
}

double mean_of(const NumberDistribution &p) {
    double m = 0;
    for (std::size_t n = 0; n < p.size(); ++n) {
        m += static_cast<double>(n) * p[n];
    }
    return m;
}

void fock_checks(Battery &b) {
    b.run("fock_core", "thermal_diagonal_and_valid", [](std::ostream &d) {
        for (double nbar : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0}) {
            DensityMatrix rho = thermal_state(nbar, required_dim(nbar, kDefaultTailTolerance));
            if (!rho.is_diagonal(0.0) || !validate(rho).ok()) {
                d << "nbar=" << nbar;
                return false;
            }
        }
        return true;
    });
    b.run("fock_core", "required_dim_monotone", [](std::ostream &d) {
        int prev = 0;
        for (double nbar = 0; nbar <= 100; nbar += 0.25) {
            int cur = required_dim(nbar, kDefaultTailTolerance);
            if (cur < prev) {
                d << "decreases at nbar=" << nbar;
                return false;
            }
            prev = cur;
        }
        for (double nbar : {0.3, 1.0, 7.0}) {
            int last = 1 << 30;
            for (double tol = 1e-14; tol < 0.5; tol *= 10) {
                int cur = required_dim(nbar, tol);
                if (cur > last) {
                    d << "increases with tail_tol at nbar=" << nbar;
                    return false;
                }
                last = cur;
            }
        }
        return true;
    });
    b.run("fock_core", "thermal_matches_geometric", [](std::ostream &d) {
        double worst = 0;
        for (double nbar : {0.1, 1.0, 3.0, 10.0}) {
            int dim = required_dim(nbar, kDefaultTailTolerance);
            NumberDistribution p = number_distribution(thermal_state(nbar, dim));
            for (int n = 0; n < dim; ++n) {
                long double exact = std::exp(static_cast<long double>(n) * std::log(static_cast<long double>(nbar)) -
                                             (n + 1) * std::log1p(static_cast<long double>(nbar)));
                worst = std::max(worst, static_cast<double>(std::abs((p[n] - exact) / exact)));
            }
        }
        d << "max relative error " << worst;
        return worst <= 1e-15;
    });
}

void jc_checks(Battery &b, Rng &rng) {
    b.run("jc_dynamics", "kraus_completeness_and_structure", [](std::ostream &d) {
        double worst = 0;
        for (double gt : {0.0, 0.3, 1.0, std::numbers::pi, 7.7}) {
            const int dim = 12;
            KrausSet k = kraus_set(gt, dim);
            Eigen::MatrixXd g = k.a_gg.transpose() * k.a_gg + k.a_eg.transpose() * k.a_eg;
            Eigen::MatrixXd e = k.a_ee.transpose() * k.a_ee + k.a_ge.transpose() * k.a_ge;
            Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
            worst = std::max(worst, (g.topLeftCorner(dim, dim) - id).cwiseAbs().maxCoeff());
            worst = std::max(worst, (e.topLeftCorner(dim, dim) - id).cwiseAbs().maxCoeff());
            for (int r = 0; r <= dim; ++r) {
                for (int c = 0; c <= dim; ++c) {
                    bool bad = (r != c && (k.a_gg(r, c) != 0 || k.a_ee(r, c) != 0)) ||
                               (r != c - 1 && k.a_eg(r, c) != 0) || (r != c + 1 && k.a_ge(r, c) != 0);
                    if (bad) {
                        d << "structure broken at gt=" << gt;
                        return false;
                    }
                }
            }
        }
        d << "max completeness deviation " << worst;
        return worst <= 1e-12;
    });
    b.run("jc_dynamics", "trace_preservation", [&rng](std::ostream &d) {
        std::uniform_real_distribution<double> pe(0, 0.5), gt(0, 10);
        std::uniform_int_distribution<int> dim(1, 12);
        double worst = 0;
        for (int i = 0; i < 200; ++i) {
            DensityMatrix rho = random_state(rng, dim(rng), i % 2 == 0);
            DensityMatrix out = apply_jc(rho, pe(rng), gt(rng));
            worst = std::max(worst, std::abs(out.trace() - rho.trace()));
        }
        d << "max trace change " << worst;
        return worst <= 1e-12;
    });
    b.run("jc_dynamics", "diagonality_preservation", [](std::ostream &d) {
        double worst = 0;
        for (double nbar : {0.0, 0.7, 2.0}) {
            for (double gt : {0.4, 2.0, 9.0}) {
                DensityMatrix out = apply_jc(thermal_state(nbar, required_dim(nbar)), 0.2, gt);
                Eigen::MatrixXcd off = out.elements();
                off.diagonal().setZero();
                worst = std::max(worst, off.cwiseAbs().maxCoeff());
            }
        }
        d << "max off-diagonal " << worst;
        return worst <= 1e-14;
    });
    b.run("jc_dynamics", "oracle_equivalence", [](std::ostream &d) {
        double worst = 0;
        for (int i = 0; i < 10; ++i) {
            double nbar = 5.0 * i / 9;
            int dim = required_dim(nbar);
            DensityMatrix rho = thermal_state(nbar, dim);
            for (int j = 0; j < 10; ++j) {
                double pe = 0.5 * j / 9;
                for (int k = 0; k < 10; ++k) {
                    double gt = 10.0 * k / 9;
                    NumberDistribution fast = output_number_stats(nbar, pe, gt, dim);
                    NumberDistribution full = number_distribution(apply_jc(rho, pe, gt));
                    for (std::size_t n = 0; n < fast.size(); ++n) {
                        worst = std::max(worst, std::abs(fast[n] - full[n]));
                    }
                }
            }
        }
        d << "max deviation " << worst;
        return worst <= 1e-11;
    });
    b.run("jc_dynamics", "energy_flow_direction", [&rng](std::ostream &d) {
        std::uniform_real_distribution<double> nb(0.05, 5), gt(0, 10);
        for (int i = 0; i < 300; ++i) {
            double nbar = nb(rng);
            double g = gt(rng);
            double eq = equilibrium_pe(nbar);
            int dim = required_dim(nbar, kEntanglementTailTolerance);
            NumberDistribution in = thermal_distribution(nbar, dim);
            double before = mean_of(in);
            std::uniform_real_distribution<double> below(0, eq), above(eq, 0.5);
            double cool = mean_of(output_number_stats(nbar, below(rng), g, dim)) - before;
            double heat = mean_of(output_number_stats(nbar, above(rng), g, dim)) - before;
            double fixed = mean_of(output_number_stats(nbar, eq, g, dim)) - before;
            if (cool > 1e-12 || heat < -1e-12 || std::abs(fixed) > 1e-9) {
                d << "nbar=" << nbar << " gt=" << g << " changes " << cool << ", " << heat << ", " << fixed;
                return false;
            }
        }
        return true;
    });
    b.run("jc_dynamics", "ground_state_periodicity", [](std::ostream &d) {
        double worst = 0;
        DensityMatrix ground = DensityMatrix::fock(0, 2);
        for (int k = 0; k <= 6; ++k) {
            for (double pe : {0.0, 0.2, 0.5}) {
                DensityMatrix out = apply_jc(ground, pe, k * std::numbers::pi);
                Eigen::MatrixXcd diff = out.elements();
                diff(0, 0) -= 1.0;
                worst = std::max(worst, diff.cwiseAbs().maxCoeff());
            }
        }
        d << "max deviation from vacuum " << worst;
        return worst <= 1e-12;
    });
    b.run("jc_dynamics", "equilibrium_fixed_point", [](std::ostream &d) {
        double worst = 0;
        for (double nbar : {0.5, 1.0, 2.0, 5.0}) {
            int dim = required_dim(nbar);
            NumberDistribution in = thermal_distribution(nbar, dim);
            for (double gt : {0.3, 1.7, std::numbers::pi, 8.2}) {
                NumberDistribution out = output_number_stats(nbar, equilibrium_pe(nbar), gt, dim);
                for (int n = 0; n + 1 < dim; ++n) {
                    worst = std::max(worst, std::abs(out[n] - in[n]));
                }
            }
        }
        d << "max population change " << worst;
        return worst <= 1e-12;
    });
}

void entanglement_checks(Battery &b, Rng &rng) {
    b.run("entanglement", "split_trace_and_positivity", [&rng](std::ostream &d) {
        double trace_dev = 0;
        double min_eig = 0;
        for (int i = 0; i < 40; ++i) {
            int dim = 2 + i % 6;
            DensityMatrix rho = i % 2 ? random_state(rng, dim, true) : DensityMatrix::diagonal(random_probs(rng, dim));
            TwoModeDensityMatrix s = split_state(rho);
            trace_dev = std::max(trace_dev, std::abs(s.trace() - rho.trace()));
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s.elements(), Eigen::EigenvaluesOnly);
            min_eig = std::min(min_eig, solver.eigenvalues().minCoeff());
        }
        d << "trace deviation " << trace_dev << ", min eigenvalue " << min_eig;
        return trace_dev <= 1e-12 && min_eig >= -1e-10;
    });
    b.run("entanglement", "split_paths_agree", [&rng](std::ostream &d) {
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            DensityMatrix rho = DensityMatrix::diagonal(random_probs(rng, 2 + i % 9));
            Eigen::MatrixXd diff = split_state(rho).elements() - split_state_general(rho).elements();
            worst = std::max(worst, diff.cwiseAbs().maxCoeff());
        }
        d << "max deviation " << worst;
        return worst <= 1e-11;
    });
    b.run("entanglement", "classical_states_have_zero_ln", [](std::ostream &d) {
        double worst = 0;
        for (double nbar : {0.5, 1.0, 2.0, 5.0}) {
            worst = std::max(worst, lnp(thermal_distribution(nbar, required_dim(nbar, kEntanglementTailTolerance))));
        }
        for (double mu : {0.5, 1.0, 3.0, 6.0}) {
            int size = static_cast<int>(mu + 14 * std::sqrt(mu) + 30);
            worst = std::max(worst, lnp(NumberDistribution(poisson_mixture({mu}, {1.0}, size))));
        }
        d << "max lnp " << worst;
        return worst <= 1e-9;
    });
    b.run("entanglement", "blocked_matches_dense", [&rng](std::ostream &d) {
        double worst = 0;
        for (int i = 0; i < 24; ++i) {
            int dim = 2 + i % 11;
            DensityMatrix rho = i % 3 == 0 ? random_state(rng, std::min(dim, 8), true)
                                           : DensityMatrix::diagonal(random_probs(rng, dim));
            TwoModeDensityMatrix s = split_state(rho);
            double blocked = pt_spectrum(s, SpectrumMethod::kBlocked).abs_sum;
            double dense = pt_spectrum(s, SpectrumMethod::kDense).abs_sum;
            worst = std::max(worst, std::abs(blocked - dense));
        }
        d << "max |sum|lambda|| deviation " << worst;
        return worst <= 1e-10;
    });
    b.run("entanglement", "local_sign_invariance", [&rng](std::ostream &d) {
        double worst = 0;
        std::bernoulli_distribution flip;
        for (int i = 0; i < 10; ++i) {
            int dim = 3 + i % 5;
            TwoModeDensityMatrix s = split_state(DensityMatrix::diagonal(random_probs(rng, dim)));
            Eigen::VectorXd signs(dim * dim);
            std::vector<double> sa(dim), sb(dim);
            for (int k = 0; k < dim; ++k) {
                sa[k] = flip(rng) ? -1 : 1;
                sb[k] = flip(rng) ? -1 : 1;
            }
            for (int k = 0; k < dim; ++k) {
                for (int l = 0; l < dim; ++l) {
                    signs(TwoModeDensityMatrix::index(k, l, dim)) = sa[k] * sb[l];
                }
            }
            TwoModeDensityMatrix flipped(dim, signs.asDiagonal() * s.elements() * signs.asDiagonal());
            worst = std::max(worst, std::abs(log_negativity(flipped) - log_negativity(s)));
        }
        d << "max change " << worst;
        return worst <= 1e-12;
    });
    b.run("entanglement", "closed_form_grid", [](std::ostream &d) {
        double worst = 0;
        DensityMatrix ground = DensityMatrix::fock(0, 2);
        for (int i = 0; i < 20; ++i) {
            double pe = 0.5 * i / 19;
            for (int j = 0; j < 20; ++j) {
                double gt = std::numbers::pi * j / 19;
                worst = std::max(worst, std::abs(lnp(apply_jc(ground, pe, gt)) - lnp_ground_closed_form(pe, gt)));
            }
        }
        d << "max deviation " << worst;
        return worst <= 1e-8;
    });
    b.run("entanglement", "lnp_trends_in_nbar", [](std::ostream &d) {
        auto series = [](double pe, double gt) {
            std::vector<double> out;
            for (int i = 0; i <= 10; ++i) {
                double nbar = 0.5 * i;
                out.push_back(lnp(output_number_stats(nbar, pe, gt, required_dim(nbar, kEntanglementTailTolerance))));
            }
            return out;
        };
        std::vector<double> rising = series(0.0, std::numbers::pi * std::sqrt(2.0));
        std::vector<double> falling = series(0.5, std::numbers::pi / 2);
        for (std::size_t i = 1; i < rising.size(); ++i) {
            if (rising[i] < rising[i - 1] || falling[i] > falling[i - 1]) {
                d << "broken at nbar=" << 0.5 * i << ": " << rising[i] << ", " << falling[i];
                return false;
            }
        }
        return true;
    });
    b.run("entanglement", "ground_output_positive", [](std::ostream &d) {
        DensityMatrix ground = DensityMatrix::fock(0, 2);
        for (double pe = 0.05; pe <= 0.5 + 1e-12; pe += 0.05) {
            for (double gt = 0.05; gt < 10; gt += 0.05) {
                double rem = std::remainder(gt, std::numbers::pi);
                if (std::abs(rem) < 0.04) {
                    continue;
                }
                if (!(lnp(apply_jc(ground, pe, gt)) > 0)) {
                    d << "zero at pe=" << pe << " gt=" << gt;
                    return false;
                }
            }
        }
        return true;
    });
}

void klyshko_checks(Battery &b, Rng &rng, int workers) {
    b.run("klyshko", "scale_robustness", [&rng](std::ostream &d) {
        std::uniform_real_distribution<double> scale(1e-6, 1.0);
        for (int i = 0; i < 500; ++i) {
            std::vector<double> p = random_probs(rng, 8);
            double c = scale(rng);
            std::vector<double> q = p;
            for (auto &x : q) {
                x *= c;
            }
            NumberDistribution pp(p), qq(q);
            for (int n = 1; n <= 6; ++n) {
                if ((klyshko_value(pp, n) < 0) != (klyshko_value(qq, n) < 0)) {
                    d << "sign flip at order " << n;
                    return false;
                }
            }
        }
        return true;
    });
    b.run("klyshko", "poisson_mixture_soundness", [&rng](std::ostream &d) {
        std::uniform_real_distribution<double> mean(0, 10);
        std::uniform_int_distribution<int> count(1, 5);
        double worst = 0;
        int flagged = 0;
        for (int i = 0; i < 1000; ++i) {
            int m = count(rng);
            std::vector<double> means(m);
            for (auto &x : means) {
                x = mean(rng);
            }
            NumberDistribution p(poisson_mixture(means, random_probs(rng, m), 40));
            KlyshkoReport r = detect(p, 20);
            for (double v : r.values) {
                worst = std::min(worst, v);
            }
            flagged += r.first_violation.has_value();
        }
        d << "min value " << worst << ", relative-threshold flags " << flagged;
        return worst >= -1e-12 && flagged == 0;
    });
    b.run("klyshko", "thermal_never_violates", [](std::ostream &d) {
        for (double nbar : {0.1, 1.0, 10.0}) {
            KlyshkoReport r = detect(thermal_distribution(nbar, klyshko_dim(nbar, 20)), 20);
            if (!r.violated_orders.empty()) {
                d << "nbar=" << nbar << " order " << r.violated_orders.front();
                return false;
            }
        }
        return true;
    });
    b.run("klyshko", "ratio_form_consistency", [&rng](std::ostream &d) {
        for (int i = 0; i < 1000; ++i) {
            NumberDistribution p(random_probs(rng, 4));
            if (klyshko_ratio_check(p) != (klyshko_value(p, 1) < 0)) {
                d << "mismatch on sample " << i;
                return false;
            }
        }
        return true;
    });
    b.run("klyshko", "equilibrium_nullity", [workers](std::ostream &d) {
        AxisRange nb{0.1, 5.0, 0.1};
        std::vector<double> values = nb.values();
        std::vector<std::optional<int>> hits(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            double nbar = values[i];
            RegionMap m = region_scan(AxisRange::single(nbar), AxisRange{0.0, 10.0, 0.25}, equilibrium_pe(nbar), 20,
                                      workers);
            if (m.detected_count() != 0) {
                d << "detection at nbar=" << nbar;
                return false;
            }
        }
        return true;
    });
}

void asymptotic_checks(Battery &b, Rng &rng) {
    b.run("asymptotics", "modulation_factor_bounded", [&rng](std::ostream &d) {
        std::uniform_real_distribution<double> gt(0, 100);
        std::uniform_int_distribution<int> n(0, 1000);
        for (int i = 0; i < 10000; ++i) {
            double f = modulation_factor(gt(rng), n(rng));
            if (!(f >= 0 && f <= 2)) {
                d << "F=" << f;
                return false;
            }
        }
        return true;
    });
    b.run("asymptotics", "agrees_with_klyshko_at_large_nbar", [](std::ostream &d) {
        const double nbar = 1e3;
        int checked = 0;
        for (double gt = 0.05; gt <= 10 + 1e-9; gt += 0.05) {
            NumberDistribution p = output_number_stats(nbar, 0.0, gt, klyshko_dim(nbar, 10));
            for (int n = 1; n <= 10; ++n) {
                double c = asymptotic_criterion(gt, n, 0.0);
                if (std::abs(c) <= 1e-3) {
                    continue;
                }
                ++checked;
                if ((klyshko_value(p, n) < 0) != (c > 0)) {
                    d << "sign mismatch at gt=" << gt << " n=" << n << " criterion " << c;
                    return false;
                }
            }
        }
        d << checked << " cells compared";
        return true;
    });
    b.run("asymptotics", "pe_star_monotone_and_bounded", [](std::ostream &d) {
        double prev = 0;
        for (int n = 1; n <= 30; ++n) {
            AsymptoticResult r = search_max_pe(n, GtInterval{0.0, 20.0}, 1e-3);
            if (r.pe_star < prev || r.pe_star > 0.5) {
                d << "n=" << n << " pe_star=" << r.pe_star << " previous " << prev;
                return false;
            }
            prev = r.pe_star;
        }
        return true;
    });
}

void ion_checks(Battery &b, Rng &rng, int workers) {
    b.run("ion_experiment", "noise_never_helps", [&rng](std::ostream &d) {
        std::uniform_real_distribution<double> sig(0, 0.1);
        for (int i = 0; i < 2000; ++i) {
            NumberDistribution p(random_probs(rng, 6));
            MeasurementModel lo, hi;
            lo.sigma = sig(rng);
            hi.sigma = sig(rng);
            if (lo.sigma > hi.sigma) {
                std::swap(lo.sigma, hi.sigma);
            }
            for (int n : {1, 2, 3}) {
                double a = worst_case_klyshko(p, lo, n);
                double c = worst_case_klyshko(p, hi, n);
                if (c < a || !std::isfinite(a) || !std::isfinite(c)) {
                    d << "order " << n << ": " << a << " -> " << c;
                    return false;
                }
            }
        }
        return true;
    });
    b.run("ion_experiment", "robust_region_inside_noiseless", [workers](std::ostream &d) {
        AxisRange nb{0.1, 3.0, 0.1};
        AxisRange gt{0.0, 10.0, 0.1};
        RegionMap clean = region_scan(nb, gt, 0.0, 3, workers);
        for (double sigma : {0.0, 0.001, 0.01, 0.05}) {
            MeasurementModel model;
            model.sigma = sigma;
            RegionMap noisy = robust_region_scan(nb, gt, model, workers);
            for (std::size_t c = 0; c < noisy.first_violation.size(); ++c) {
                bool in_noisy = noisy.first_violation[c].has_value();
                bool in_clean = clean.first_violation[c].has_value();
                if ((in_noisy && !in_clean) || (sigma == 0 && noisy.first_violation[c] != clean.first_violation[c])) {
                    d << "sigma=" << sigma << " cell " << c;
                    return false;
                }
            }
        }
        return true;
    });
}

void sweep_checks(Battery &b, int workers) {
    b.run("sweep_engine", "deterministic_and_complete", [workers](std::ostream &d) {
        SweepSpec spec;
        spec.quantity = Quantity::kLnp;
        spec.axes = {{"nbar", {0.0, 2.0, 0.5}}, {"gt", {0.0, 6.0, 0.75}}};
        spec.fixed["pe"] = 0.2;
        std::vector<SweepRecord> serial = run_sweep(spec, 1);
        std::vector<SweepRecord> parallel = run_sweep(spec, std::max(workers, 3));
        if (serial.size() != spec.cell_count() || serial.size() != 5 * 9) {
            d << "record count " << serial.size();
            return false;
        }
        std::string text = format_csv(serial);
        if (text != format_csv(parallel)) {
            d << "CSV differs between worker counts";
            return false;
        }
        return format_csv(parse_csv(text)) == text;
    });
}

}  // namespace

SelftestSummary run_selftest(std::uint64_t seed, int workers, std::ostream &out) {
    Rng rng(seed);
    Battery b(out);
    fock_checks(b);
    jc_checks(b, rng);
    entanglement_checks(b, rng);
    klyshko_checks(b, rng, workers);
    asymptotic_checks(b, rng);
    ion_checks(b, rng, workers);
    sweep_checks(b, workers);
    SelftestSummary s = b.summary();
    out << s.passed << " passed, " << s.failed << " failed\n";
    return s;
}

}  // namespace jctherm
