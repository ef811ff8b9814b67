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
#include <sstream>
#include <string>
#include <vector>

#include "jctherm/errors.h"

namespace jctherm {

namespace {

void require_pulse_area(double gt) {
    if (!std::isfinite(gt) || gt < 0) {
        throw std::invalid_argument("pulse area gt must be finite and non-negative, got " + std::to_string(gt));
    }
}

void require_pe(double pe) {
    if (!(pe >= 0 && pe <= 0.5)) {
        throw std::invalid_argument("pe must lie in [0, 1/2], got " + std::to_string(pe));
    }
}

void require_leakage(double trace) {
    double leakage = 1 - trace;
    if (leakage > kMaxInputLeakage) {
        std::ostringstream msg;
        msg << "input state has leaked " << leakage << " of its trace past the Fock cutoff (limit "
            << kMaxInputLeakage << "); increase the dimension";
        throw TruncationError(msg.str());
    }
}

double cos2(double x) {
    double c = std::cos(x);
    return c * c;
}

double sin2(double x) {
    double s = std::sin(x);
    return s * s;
}

}  // namespace

KrausSet kraus_set(double gt, int dim) {
    require_pulse_area(gt);
    if (dim <= 0) {
        throw InvalidDimensionError("Kraus dimension must be positive, got " + std::to_string(dim));
    }
    KrausSet k;
    k.gt = gt;
    k.dim = dim;
    const int w = dim + 1;
    k.a_gg = Eigen::MatrixXd::Zero(w, w);
    k.a_eg = Eigen::MatrixXd::Zero(w, w);
    k.a_ee = Eigen::MatrixXd::Zero(w, w);
    k.a_ge = Eigen::MatrixXd::Zero(w, w);
    for (int n = 0; n < w; ++n) {
        double root_n = std::sqrt(static_cast<double>(n));
        double root_n1 = std::sqrt(static_cast<double>(n + 1));
        k.a_gg(n, n) = std::cos(gt * root_n);
        k.a_ee(n, n) = std::cos(gt * root_n1);
        if (n >= 1) {
            k.a_eg(n - 1, n) = std::sin(gt * root_n);
        }
        if (n + 1 < w) {
            k.a_ge(n + 1, n) = -std::sin(gt * root_n1);
        }
    }
    return k;
}

DensityMatrix apply_jc(const DensityMatrix &rho, double pe, double gt) {
    return apply_jc(rho, pe, kraus_set(gt, rho.dim()));
}

DensityMatrix apply_jc(const DensityMatrix &rho, double pe, const KrausSet &kraus) {
    require_pe(pe);
    if (kraus.dim != rho.dim()) {
        throw InvalidDimensionError(
            "Kraus set built for dimension " + std::to_string(kraus.dim) + " applied to a state of dimension " +
            std::to_string(rho.dim()));
    }
    require_leakage(rho.trace());

    const int w = kraus.workspace_dim();
    Eigen::MatrixXcd padded = Eigen::MatrixXcd::Zero(w, w);
    padded.topLeftCorner(rho.dim(), rho.dim()) = rho.elements();

    auto sandwich = [&](const Eigen::MatrixXd &a) -> Eigen::MatrixXcd {
        Eigen::MatrixXcd ac = a.cast<std::complex<double>>();
        return ac * padded * ac.transpose();
    };

    Eigen::MatrixXcd out = (1 - pe) * (sandwich(kraus.a_gg) + sandwich(kraus.a_eg));
    if (pe > 0) {
        out += pe * (sandwich(kraus.a_ee) + sandwich(kraus.a_ge));
    }
    return DensityMatrix(std::move(out));
}

NumberDistribution jc_number_stats(const NumberDistribution &in, double pe, double gt) {
    require_pe(pe);
    require_pulse_area(gt);
    if (in.size() == 0) {
        throw InvalidDimensionError("empty number distribution");
    }
    require_leakage(in.total());

    const std::size_t out_size = in.size() + 1;
    std::vector<double> out(out_size);
    for (std::size_t n = 0; n < out_size; ++n) {
        double root_n = std::sqrt(static_cast<double>(n));
        double root_n1 = std::sqrt(static_cast<double>(n + 1));
        double p_n = in.at_or_zero(n);
        double p_up = in.at_or_zero(n + 1);
        double p_down = n >= 1 ? in.at_or_zero(n - 1) : 0.0;
        double absorb = cos2(gt * root_n) * p_n + sin2(gt * root_n1) * p_up;
        double emit = cos2(gt * root_n1) * p_n + sin2(gt * root_n) * p_down;
        out[n] = (1 - pe) * absorb + pe * emit;
    }
    return NumberDistribution(std::move(out));
}

NumberDistribution output_number_stats(double nbar, double pe, double gt, int dim) {
    return jc_number_stats(thermal_distribution(nbar, dim), pe, gt);
}

DensityMatrix repeat_absorption(const DensityMatrix &rho, double gt, int repeats) {
    require_pulse_area(gt);
    if (repeats < 0) {
        throw std::invalid_argument("repeat count must be non-negative");
    }
    if (repeats == 0) {
        return rho;
    }
    if (rho.is_diagonal()) {
        NumberDistribution p = repeat_absorption(number_distribution(rho), gt, repeats);
        return DensityMatrix::diagonal(p.probs());
    }
    const int keep = rho.dim() + 1;
    DensityMatrix cur = apply_jc(rho, 0.0, gt);
    KrausSet kraus = kraus_set(gt, keep);
    for (int m = 1; m < repeats; ++m) {
        DensityMatrix next = apply_jc(cur, 0.0, kraus);
        cur = DensityMatrix(next.elements().topLeftCorner(keep, keep));
    }
    return cur;
}

NumberDistribution repeat_absorption(const NumberDistribution &in, double gt, int repeats) {
    require_pulse_area(gt);
    if (repeats < 0) {
        throw std::invalid_argument("repeat count must be non-negative");
    }
    if (repeats == 0) {
        return in;
    }
    const std::size_t keep = in.size() + 1;
    NumberDistribution cur = jc_number_stats(in, 0.0, gt);
    for (int m = 1; m < repeats; ++m) {
        NumberDistribution next = jc_number_stats(cur, 0.0, gt);
        std::vector<double> trimmed(next.probs().begin(), next.probs().begin() + keep);
        cur = NumberDistribution(std::move(trimmed));
    }
    return cur;
}

}  // namespace jctherm
