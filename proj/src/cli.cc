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

#include "jctherm/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <sstream>

#include "jctherm/entanglement.h"
#include "jctherm/errors.h"
#include "jctherm/fock.h"
#include "jctherm/jc_dynamics.h"
#include "jctherm/parallel.h"
#include "jctherm/selftest.h"
#include "jctherm/svg_heatmap.h"
#include "jctherm/sweep.h"

namespace jctherm {

namespace {

enum class Role {
    kAxis,    // always a sweep axis
    kParam,   // axis when given a multi-point range, fixed otherwise
    kScalar,  // single number
};

struct FlagDef {
    std::string flag;
    std::string key;  // sweep parameter name
    std::string default_value;
    std::string help;
    Role role;
};

struct CommandDef {
    std::string name;
    std::string description;
    std::optional<Quantity> quantity;
    std::vector<FlagDef> flags;
};

std::string format_default(double x) {
    return format_real(x);
}

const std::vector<CommandDef> &commands() {
    static const std::string kRangeHelp = " (start:stop[:step], step 1 if omitted, or a single value)";
    static const std::vector<CommandDef> table{
        {"lnp-sweep",
         "Logarithmic negativity potential of the oscillator after one interaction, over (nbar, gt). "
         "pe=0 gives the surface that grows with nbar near gt=pi and gt=pi*sqrt(2); pe=0.5 gives the "
         "surface peaked at nbar=0, gt=pi/2.",
         Quantity::kLnp,
         {{"nbar", "nbar", "0:5:0.1", "oscillator mean excitation" + kRangeHelp, Role::kAxis},
          {"gt", "gt", "0:10:0.05", "pulse area" + kRangeHelp, Role::kAxis},
          {"pe", "pe", "0", "two-level excited population" + kRangeHelp, Role::kParam}}},
        {"filter-sweep",
         "Potential after local scissors keeping Fock levels 0..D_f of each split mode, over (nbar, D_f); "
         "adds the filter success probability as p_success.",
         Quantity::kLnpFiltered,
         {{"nbar", "nbar", "0:5:0.1", "oscillator mean excitation" + kRangeHelp, Role::kAxis},
          {"filter-dim", "D_f", "0:30:1", "highest Fock level kept per mode" + kRangeHelp, Role::kAxis},
          {"gt", "gt", format_default(std::numbers::pi * std::numbers::sqrt2), "pulse area" + kRangeHelp,
           Role::kParam},
          {"pe", "pe", "0", "two-level excited population" + kRangeHelp, Role::kParam}}},
        {"repeat-sweep",
         "Potential after M successive absorptions by ground-state two-level systems, over (nbar, M).",
         Quantity::kLnpRepeat,
         {{"nbar", "nbar", "0:5:0.1", "oscillator mean excitation" + kRangeHelp, Role::kAxis},
          {"repeats", "M", "1:10:1", "number of absorptions" + kRangeHelp, Role::kAxis},
          {"gt", "gt", format_default(std::numbers::pi), "pulse area" + kRangeHelp, Role::kParam}}},
        {"klyshko-scan",
         "Lowest violated Klyshko order over (nbar, gt); empty cells are undetected. --max-order 3 or 4 "
         "maps the low-order detection region.",
         Quantity::kKlyshkoMinOrder,
         {{"nbar", "nbar", "0.1:5:0.1", "oscillator mean excitation" + kRangeHelp, Role::kAxis},
          {"gt", "gt", "0:10:0.05", "pulse area" + kRangeHelp, Role::kAxis},
          {"pe", "pe", "0", "two-level excited population" + kRangeHelp, Role::kParam},
          {"max-order", "order", "4", "highest criterion order evaluated", Role::kScalar}}},
        {"robust-scan",
         "Lowest Klyshko order still violated under worst-case population errors of +-sigma on the "
         "lowest measured populations, pe=0 (trapped-ion readout).",
         Quantity::kKlyshkoRobustMinOrder,
         {{"nbar", "nbar", "0.1:5:0.1", "oscillator mean excitation" + kRangeHelp, Role::kAxis},
          {"gt", "gt", "0:10:0.05", "pulse area" + kRangeHelp, Role::kAxis},
          {"sigma", "sigma", "0.01", "population standard error" + kRangeHelp, Role::kParam},
          {"populations", "populations", "5", "number of lowest populations measured", Role::kScalar},
          {"max-order", "order", "3", "highest criterion order evaluated", Role::kScalar}}},
        {"asymptotic",
         "Largest two-level excitation pe for which order n still detects nonclassicality as nbar grows, "
         "maximized over gt, next to the bound sqrt(n^2+n)-n.",
         Quantity::kAsymptoticPeStar,
         {{"n", "order", "1:30:1", "criterion order" + kRangeHelp, Role::kAxis},
          {"gt-min", "gt_min", "0", "lower end of the gt search interval", Role::kScalar},
          {"gt-max", "gt_max", "10", "upper end of the gt search interval", Role::kScalar},
          {"resolution", "resolution", "0.001", "gt grid spacing before refinement", Role::kScalar}}},
        {"closed-form-check",
         "Compares the potential of the vacuum after one interaction, computed through the dense "
         "two-mode partial transpose, with its closed form on a grid over pe in [0,0.5], gt in [0,pi]; "
         "fails if the deviation exceeds 1e-8.",
         std::nullopt,
         {{"grid", "grid", "20", "points per axis", Role::kScalar}}},
        {"selftest", "Runs the invariant battery of every module and reports pass/fail counts.", std::nullopt, {}},
    };
    return table;
}

const CommandDef &command(const std::string &name) {
    for (const auto &c : commands()) {
        if (c.name == name) {
            return c;
        }
    }
    throw UsageError("unknown subcommand '" + name + "'");
}

double parse_number(const std::string &text, const std::string &what) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        throw UsageError("malformed number '" + text + "' for " + what);
    }
    if (used != text.size() || !std::isfinite(v)) {
        throw UsageError("malformed number '" + text + "' for " + what);
    }
    return v;
}

std::vector<std::string> split_colon(const std::string &text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(':', start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

int parse_workers(const std::string &text) {
    double w = parse_number(text, "--workers");
    if (w < 1 || w != std::floor(w) || w > 4096) {
        throw UsageError("--workers must be a positive integer, got '" + text + "'");
    }
    return static_cast<int>(w);
}

SweepSpec build_spec(const CommandDef &def, const RunConfig &config) {
    SweepSpec spec;
    spec.quantity = *def.quantity;
    for (const auto &flag : def.flags) {
        const std::string &raw = config.parameters.at(flag.flag);
        if (flag.role == Role::kScalar) {
            spec.fixed[flag.key] = parse_number(raw, "--" + flag.flag);
            continue;
        }
        AxisRange range = parse_range(raw);
        if (flag.role == Role::kAxis || range.size() > 1) {
            spec.axes.push_back({flag.key, range});
        } else {
            spec.fixed[flag.key] = range.start;
        }
    }
    return spec;
}

int run_sweep_command(const CommandDef &def, const RunConfig &config, std::ostream &out, std::ostream &err) {
    SweepSpec spec = build_spec(def, config);
    std::vector<SweepRecord> records = run_sweep(spec, config.workers);
    write_csv(records, config.output_path, out);
    if (!config.svg_path.empty()) {
        if (spec.axes.size() != 2) {
            err << "--svg needs exactly two swept axes; skipped\n";
        } else {
            write_svg_heatmap(records, def.name + " " + std::string(quantity_name(spec.quantity)), config.svg_path);
        }
    }
    std::size_t errors = error_count(records);
    if (errors > 0) {
        err << def.name << ": " << errors << " of " << records.size() << " cells failed; first error: ";
        for (const auto &r : records) {
            if (r.status == CellStatus::kError) {
                err << r.error << "\n";
                break;
            }
        }
        return kExitFailure;
    }
    return kExitOk;
}

int run_closed_form_check(const RunConfig &config, std::ostream &out, std::ostream &err) {
    double g = parse_number(config.parameters.at("grid"), "--grid");
    int points = static_cast<int>(g);
    DensityMatrix ground = DensityMatrix::fock(0, 2);
    double worst = 0;
    double worst_pe = 0, worst_gt = 0;
    for (int i = 0; i < points; ++i) {
        double pe = points > 1 ? 0.5 * i / (points - 1) : 0.0;
        for (int j = 0; j < points; ++j) {
            double gt = points > 1 ? std::numbers::pi * j / (points - 1) : 0.0;
            TwoModeDensityMatrix split = split_state(apply_jc(ground, pe, gt));
            double dense = pt_spectrum(split, SpectrumMethod::kDense).log_negativity();
            double dev = std::abs(dense - lnp_ground_closed_form(pe, gt));
            if (dev > worst) {
                worst = dev;
                worst_pe = pe;
                worst_gt = gt;
            }
        }
    }
    out << "closed-form-check: " << points << "x" << points << " grid, max deviation " << format_real(worst)
        << " at pe=" << format_real(worst_pe) << " gt=" << format_real(worst_gt) << "\n";
    if (!(worst <= 1e-8)) {
        err << "closed-form-check: deviation exceeds 1e-8\n";
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace

AxisRange parse_range(const std::string &text) {
    std::vector<std::string> parts = split_colon(text);
    AxisRange r;
    if (parts.size() == 1) {
        r = AxisRange::single(parse_number(parts[0], "range"));
    } else if (parts.size() == 2 || parts.size() == 3) {
        r.start = parse_number(parts[0], "range start");
        r.stop = parse_number(parts[1], "range stop");
        r.step = parts.size() == 3 ? parse_number(parts[2], "range step") : 1.0;
    } else {
        throw UsageError("malformed range '" + text + "' (expected start:stop:step)");
    }
    if (!(r.step > 0)) {
        throw UsageError("range '" + text + "' has step <= 0");
    }
    if (r.start > r.stop) {
        throw UsageError("range '" + text + "' has start > stop");
    }
    try {
        r.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    return r;
}

RunConfig parse_args(const std::vector<std::string> &args) {
    CLI::App app{"Thermally driven nonclassicality of an oscillator coupled to a two-level system.\n"
                 "Ranges are written start:stop[:step] with step 1 when omitted. Exit status: 0 success, 1 usage error, "
                 "2 computation or check failure, 3 I/O error.",
                 "jctherm"};
    app.require_subcommand(1);
    app.allow_extras(false);

    const char *env_workers = std::getenv(kWorkersEnvVar);
    std::string default_workers_text = env_workers ? env_workers : std::to_string(default_workers());

    struct Bound {
        CLI::App *app;
        const CommandDef *def;
        std::map<std::string, std::string> values;
        std::string out;
        std::string svg;
        std::string workers;
        std::uint64_t seed = 0;
    };
    std::vector<std::unique_ptr<Bound>> bound;
    for (const auto &def : commands()) {
        auto b = std::make_unique<Bound>();
        b->def = &def;
        b->app = app.add_subcommand(def.name, def.description);
        for (const auto &flag : def.flags) {
            b->values[flag.flag] = flag.default_value;
            b->app->add_option("--" + flag.flag, b->values[flag.flag], flag.help)->capture_default_str();
        }
        b->workers = default_workers_text;
        b->app
            ->add_option("--workers", b->workers,
                         std::string("worker threads (default from ") + kWorkersEnvVar + ", else the hardware thread count)")
            ->capture_default_str();
        if (def.quantity) {
            b->app->add_option("--out", b->out, "CSV destination, - for stdout")->required();
            b->app->add_option("--svg", b->svg, "optional grayscale heatmap of a two-axis sweep");
        }
        if (def.name == "selftest") {
            b->app->add_option("--seed", b->seed, "seed for the randomized checks")->capture_default_str();
        }
        bound.push_back(std::move(b));
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        std::ostringstream out, err;
        app.exit(e, out, err);
        throw HelpRequested(out.str());
    } catch (const CLI::CallForAllHelp &e) {
        std::ostringstream out, err;
        app.exit(e, out, err);
        throw HelpRequested(out.str());
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    for (const auto &b : bound) {
        if (!b->app->parsed()) {
            continue;
        }
        RunConfig config;
        config.subcommand = b->def->name;
        config.parameters = b->values;
        config.output_path = b->out;
        config.svg_path = b->svg;
        config.workers = parse_workers(b->workers);
        config.seed = b->seed;
        for (const auto &flag : b->def->flags) {
            const std::string &raw = config.parameters[flag.flag];
            if (flag.role == Role::kScalar) {
                parse_number(raw, "--" + flag.flag);
            } else {
                parse_range(raw);
            }
        }
        if (b->def->quantity) {
            try {
                build_spec(*b->def, config).validate();
            } catch (const UsageError &) {
                throw;
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
        }
        if (config.subcommand == "closed-form-check") {
            double g = parse_number(config.parameters["grid"], "--grid");
            if (g < 1 || g != std::floor(g) || g > 1000) {
                throw UsageError("--grid must be an integer in [1, 1000]");
            }
        }
        return config;
    }
    throw UsageError("no subcommand given");
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    const CommandDef &def = command(config.subcommand);
    try {
        if (def.quantity) {
            return run_sweep_command(def, config, out, err);
        }
        if (def.name == "closed-form-check") {
            return run_closed_form_check(config, out, err);
        }
        SelftestSummary s = run_selftest(config.seed, config.workers, out);
        if (s.failed > 0) {
            err << "selftest: " << s.failed << " check(s) failed\n";
            return kExitFailure;
        }
        return kExitOk;
    } catch (const IoError &e) {
        err << def.name << ": " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception &e) {
        err << def.name << ": " << e.what() << "\n";
        return kExitFailure;
    }
}

int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig config;
    try {
        config = parse_args(args);
    } catch (const HelpRequested &h) {
        out << h.what();
        return kExitOk;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n(run with --help for usage)\n";
        return kExitUsage;
    }
    return run(config, out, err);
}

}  // namespace jctherm
