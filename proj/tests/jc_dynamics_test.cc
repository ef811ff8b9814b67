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

#include "jctherm/jc_dynamics.h"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "jctherm/errors.h"
#include "oracles.h"

using namespace jctherm;
using std::numbers::pi;

namespace {

double max_abs(const Eigen::MatrixXcd &m) {
    return m.cwiseAbs().maxCoeff();
}

// Textbook population formula, valid for nbar > 0.
double closed_form_population(double nbar, double pe, double gt, int n) {
    double w = std::pow(nbar, n) / std::pow(1 + nbar, n + 1);
    double c_n = std::cos(gt * std::sqrt(n)), s_n = std::sin(gt * std::sqrt(n));
    double c_n1 = std::cos(gt * std::sqrt(n + 1)), s_n1 = std::sin(gt * std::sqrt(n + 1));
    return w * (pe * (c_n1 * c_n1 + (1 + nbar) / nbar * s_n * s_n) +
                (1 - pe) * (c_n * c_n + nbar / (1 + nbar) * s_n1 * s_n1));
}

}  // namespace

TEST(KrausSet, NoInteraction) {
    KrausSet k = kraus_set(0, 5);
    EXPECT_EQ(k.a_gg, Eigen::MatrixXd::Identity(6, 6));
    EXPECT_EQ(k.a_ee, Eigen::MatrixXd::Identity(6, 6));
    EXPECT_EQ(k.a_eg.cwiseAbs().maxCoeff(), 0);
    EXPECT_EQ(k.a_ge.cwiseAbs().maxCoeff(), 0);
}

TEST(KrausSet, QuarterPeriodEntries) {
    KrausSet k = kraus_set(pi / 2, 2);
    EXPECT_NEAR(k.a_eg(0, 1), 1, 1e-15);
    EXPECT_NEAR(k.a_gg(0, 0), 1, 1e-15);
    EXPECT_NEAR(k.a_gg(1, 1), 0, 1e-15);
}

TEST(KrausSet, HalfPeriodEntries) {
    KrausSet k = kraus_set(pi, 3);
    EXPECT_NEAR(k.a_gg(1, 1), -1, 1e-15);
    EXPECT_NEAR(k.a_ge(2, 1), 0.963903, 1e-6);
    EXPECT_NEAR(k.a_ge(2, 1), -std::sin(pi * std::sqrt(2.0)), 1e-15);
}

TEST(KrausSet, CompletenessOnInterior) {
    for (double gt : {0.1, 1.0, 2.7, 9.9}) {
        const int dim = 15;
        KrausSet k = kraus_set(gt, dim);
        Eigen::MatrixXd g = k.a_gg.transpose() * k.a_gg + k.a_eg.transpose() * k.a_eg;
        Eigen::MatrixXd e = k.a_ee.transpose() * k.a_ee + k.a_ge.transpose() * k.a_ge;
        Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
        EXPECT_LE((g.topLeftCorner(dim, dim) - id).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LE((e.topLeftCorner(dim, dim) - id).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(KrausSet, ShiftStructure) {
    KrausSet k = kraus_set(1.234, 6);
    for (int r = 0; r <= 6; ++r) {
        for (int c = 0; c <= 6; ++c) {
            if (r != c) {
                EXPECT_EQ(k.a_gg(r, c), 0);
                EXPECT_EQ(k.a_ee(r, c), 0);
            }
            if (r != c - 1) {
                EXPECT_EQ(k.a_eg(r, c), 0);
            }
            if (r != c + 1) {
                EXPECT_EQ(k.a_ge(r, c), 0);
            }
        }
    }
}

TEST(KrausSet, RejectsBadInput) {
    EXPECT_THROW(kraus_set(1, 0), InvalidDimensionError);
    EXPECT_THROW(kraus_set(-1, 3), std::invalid_argument);
}

TEST(ApplyJc, MatchesUnitaryEvolution) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        int d = 2 + trial % 6;
        Eigen::MatrixXcd rho = oracle::random_state(rng, d, trial % 2 == 0);
        double pe = std::fmod(0.05 * trial, 0.5);
        double gt = 0.37 + 0.83 * trial;
        DensityMatrix out = apply_jc(DensityMatrix(rho), pe, gt);
        Eigen::MatrixXcd expected = oracle::jc_channel(rho, pe, gt);
        ASSERT_EQ(out.dim(), d + 1);
        EXPECT_LE(max_abs(out.elements() - expected), 1e-12) << "trial " << trial;
    }
}

TEST(ApplyJc, VacuumWithGroundQubitIsUntouched) {
    DensityMatrix out = apply_jc(DensityMatrix::fock(0, 3), 0, 1.3);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected(0, 0) = 1;
    EXPECT_LE(max_abs(out.elements() - expected), 1e-15);
}

TEST(ApplyJc, HalfExcitedQubitQuarterPeriod) {
    DensityMatrix out = apply_jc(DensityMatrix::fock(0, 2), 0.5, pi / 2);
    EXPECT_NEAR(out(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(out(1, 1).real(), 0.5, 1e-15);
    EXPECT_NEAR(out(2, 2).real(), 0.0, 1e-15);
    EXPECT_LE(std::abs(out(0, 1)), 1e-15);
}

TEST(ApplyJc, TracePreserved) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        DensityMatrix rho(oracle::random_state(rng, 1 + trial % 9, false));
        DensityMatrix out = apply_jc(rho, std::fmod(0.01 * trial, 0.5), 0.21 * trial);
        EXPECT_NEAR(out.trace(), rho.trace(), 1e-12);
    }
}

TEST(ApplyJc, DiagonalStaysDiagonal) {
    DensityMatrix out = apply_jc(thermal_state(1.5, 40), 0.3, 2.2);
    EXPECT_TRUE(out.is_diagonal(1e-14));
}

TEST(ApplyJc, GroundStatePeriodicity) {
    for (int k = 0; k < 5; ++k) {
        DensityMatrix out = apply_jc(DensityMatrix::fock(0, 2), 0.4, k * pi);
        EXPECT_NEAR(out(0, 0).real(), 1, 1e-12);
        EXPECT_NEAR(out(1, 1).real(), 0, 1e-12);
    }
}

TEST(ApplyJc, RejectsLeakyInputWithMeasuredLeakage) {
    DensityMatrix leaky = DensityMatrix::diagonal(std::vector<double>{0.5, 0.49});
    try {
        apply_jc(leaky, 0.1, 1.0);
        FAIL() << "expected TruncationError";
    } catch (const TruncationError &e) {
        EXPECT_NE(std::string(e.what()).find("0.01"), std::string::npos) << e.what();
    }
    EXPECT_NO_THROW(apply_jc(thermal_state(1, 25), 0.1, 1.0));  // leakage 3e-8
}

TEST(ApplyJc, RejectsBadParameters) {
    DensityMatrix rho = DensityMatrix::fock(0, 2);
    EXPECT_THROW(apply_jc(rho, 0.6, 1), std::invalid_argument);
    EXPECT_THROW(apply_jc(rho, -0.1, 1), std::invalid_argument);
    EXPECT_THROW(apply_jc(rho, 0.1, -1), std::invalid_argument);
    EXPECT_THROW(apply_jc(rho, 0.1, kraus_set(1, 5)), InvalidDimensionError);
}

TEST(OutputNumberStats, HalfExcitedQubitOnVacuum) {
    NumberDistribution p = output_number_stats(0, 0.5, pi / 2, 4);
    ASSERT_EQ(p.size(), 5u);
    EXPECT_NEAR(p[0], 0.5, 1e-15);
    EXPECT_NEAR(p[1], 0.5, 1e-15);
    for (int n = 2; n < 5; ++n) {
        EXPECT_NEAR(p[n], 0, 1e-15);
    }
}

TEST(OutputNumberStats, NoInteractionKeepsThermal) {
    NumberDistribution p = output_number_stats(2, 0.3, 0, 60);
    NumberDistribution t = thermal_distribution(2, 60);
    for (int n = 0; n < 60; ++n) {
        EXPECT_DOUBLE_EQ(p[n], t[n]);
    }
}

TEST(OutputNumberStats, MatchesMatrixPath) {
    NumberDistribution fast = output_number_stats(1, 0, pi, 30);
    NumberDistribution full = number_distribution(apply_jc(thermal_state(1, 30), 0, pi));
    ASSERT_EQ(fast.size(), full.size());
    for (std::size_t n = 0; n < fast.size(); ++n) {
        EXPECT_NEAR(fast[n], full[n], 1e-12);
    }
}

TEST(OutputNumberStats, MatchesUnitaryOracleOnGrid) {
    for (double nbar : {0.0, 0.8, 3.0}) {
        int dim = required_dim(nbar);
        Eigen::MatrixXcd rho = thermal_state(nbar, dim).elements();
        for (double pe : {0.0, 0.27, 0.5}) {
            for (double gt : {0.4, 3.3, 8.8}) {
                NumberDistribution p = output_number_stats(nbar, pe, gt, dim);
                Eigen::MatrixXcd expected = oracle::jc_channel(rho, pe, gt);
                for (std::size_t n = 0; n < p.size(); ++n) {
                    EXPECT_NEAR(p[n], expected(n, n).real(), 1e-11);
                }
            }
        }
    }
}

TEST(OutputNumberStats, MatchesTextbookFormula) {
    for (double nbar : {0.3, 1.0, 4.0}) {
        int dim = required_dim(nbar);
        for (double pe : {0.0, 0.2, 0.5}) {
            for (double gt : {0.7, 5.1}) {
                NumberDistribution p = output_number_stats(nbar, pe, gt, dim);
                for (int n = 0; n + 1 < dim; ++n) {
                    EXPECT_NEAR(p[n], closed_form_population(nbar, pe, gt, n), 1e-14);
                }
            }
        }
    }
}

TEST(OutputNumberStats, EquilibriumIsFixedPoint) {
    for (double nbar : {0.5, 1.0, 2.0, 5.0}) {
        int dim = required_dim(nbar);
        NumberDistribution t = thermal_distribution(nbar, dim);
        for (double gt : {0.1, 2.0, 7.5}) {
            NumberDistribution p = output_number_stats(nbar, equilibrium_pe(nbar), gt, dim);
            for (int n = 0; n + 1 < dim; ++n) {
                EXPECT_NEAR(p[n], t[n], 1e-12);
            }
        }
    }
}

TEST(OutputNumberStats, EnergyFlowsFromHotterToColder) {
    double nbar = 1.7;
    int dim = required_dim(nbar, 1e-12);
    double before = thermal_distribution(nbar, dim).mean();
    double eq = equilibrium_pe(nbar);
    for (double gt : {0.3, 1.9, 6.4}) {
        EXPECT_LE(output_number_stats(nbar, eq * 0.5, gt, dim).mean(), before + 1e-12);
        EXPECT_GE(output_number_stats(nbar, 0.5 * (eq + 0.5), gt, dim).mean(), before - 1e-12);
        EXPECT_NEAR(output_number_stats(nbar, eq, gt, dim).mean(), before, 1e-9);
    }
}

TEST(RepeatAbsorption, ZeroRepeatsIsIdentity) {
    DensityMatrix rho = thermal_state(1, 10);
    EXPECT_EQ(repeat_absorption(rho, 1.0, 0).elements(), rho.elements());
}

TEST(RepeatAbsorption, SingleRepeatIsOneInteraction) {
    int dim = required_dim(3);
    DensityMatrix rho = thermal_state(3, dim);
    Eigen::MatrixXcd once = apply_jc(rho, 0, pi).elements();
    EXPECT_LE(max_abs(repeat_absorption(rho, pi, 1).elements() - once), 1e-15);
}

TEST(RepeatAbsorption, MatchesIteratedUnitary) {
    std::mt19937_64 rng(3);
    Eigen::MatrixXcd rho = oracle::random_state(rng, 6, false);
    Eigen::MatrixXcd expected = rho;
    for (int m = 0; m < 4; ++m) {
        expected = oracle::jc_channel(expected, 0, 1.1).topLeftCorner(7, 7).eval();
    }
    DensityMatrix out = repeat_absorption(DensityMatrix(rho), 1.1, 4);
    ASSERT_EQ(out.dim(), 7);
    EXPECT_LE(max_abs(out.elements() - expected), 1e-12);
}

TEST(RepeatAbsorption, DiagonalPathMatchesMatrixPath) {
    DensityMatrix rho = thermal_state(2, 40);
    NumberDistribution fast = repeat_absorption(thermal_distribution(2, 40), 2.3, 6);
    Eigen::MatrixXcd cur = rho.elements();
    for (int m = 0; m < 6; ++m) {
        cur = oracle::jc_channel(cur, 0, 2.3).topLeftCorner(41, 41).eval();
    }
    for (int n = 0; n < 41; ++n) {
        EXPECT_NEAR(fast[n], cur(n, n).real(), 1e-12);
    }
}

TEST(RepeatAbsorption, ConvergesToSquareLadder) {
    int dim = required_dim(3);
    NumberDistribution p = repeat_absorption(thermal_distribution(3, dim), pi, 50);
    double off = 0;
    for (std::size_t n = 0; n < p.size(); ++n) {
        long root = std::lround(std::sqrt(static_cast<double>(n)));
        if (static_cast<std::size_t>(root * root) != n) {
            off += p[n];
        }
    }
    EXPECT_LT(off, 1e-3);
}

TEST(RepeatAbsorption, RejectsNegativeCount) {
    EXPECT_THROW(repeat_absorption(thermal_distribution(1, 5), 1.0, -1), std::invalid_argument);
}
