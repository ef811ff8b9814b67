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

#include "jctherm/sweep.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "jctherm/asymptotics.h"
#include "jctherm/entanglement.h"
#include "jctherm/errors.h"
#include "jctherm/fock.h"
#include "jctherm/ion_experiment.h"
#include "jctherm/jc_dynamics.h"
#include "jctherm/klyshko.h"
#include "jctherm/parallel.h"

namespace jctherm {

namespace {

const std::set<std::string> kAxisNames{"nbar", "gt", "pe", "D_f", "M", "order", "sigma"};
const std::set<std::string> kFixedOnlyNames{"populations", "gt_min", "gt_max", "resolution", "tail_tol"};
const std::set<std::string> kIntegerNames{"order", "populations", "M", "D_f"};

struct QuantityInfo {
    Quantity quantity;
    std::string_view name;
    std::vector<std::string> params;
};

const std::vector<QuantityInfo> &quantity_table() {
    static const std::vector<QuantityInfo> table{
        {Quantity::kLnp, "lnp", {"nbar", "pe", "gt"}},
        {Quantity::kLnpFiltered, "lnp_filtered", {"nbar", "pe", "gt", "D_f"}},
        {Quantity::kLnpRepeat, "lnp_repeat", {"nbar", "gt", "M"}},
        {Quantity::kKlyshkoMinOrder, "klyshko_min_order", {"nbar", "pe", "gt", "order"}},
        {Quantity::kKlyshkoRobustMinOrder, "klyshko_robust_min_order", {"nbar", "gt", "sigma", "populations", "order"}},
        {Quantity::kAsymptoticPeStar, "asymptotic_pe_star", {"order", "gt_min", "gt_max", "resolution"}},
    };
    return table;
}

const QuantityInfo &info(Quantity q) {
    for (const auto &entry : quantity_table()) {
        if (entry.quantity == q) {
            return entry;
        }
    }
    throw std::logic_error("unhandled quantity");
}

class Cell {
   public:
    Cell(const SweepSpec &spec, const std::vector<std::pair<std::string, double>> &coordinates)
        : spec_(spec), coordinates_(coordinates) {
    }

    double real(const std::string &name) const {
        for (const auto &[key, v] : coordinates_) {
            if (key == name) {
                return v;
            }
        }
        auto it = spec_.fixed.find(name);
        if (it == spec_.fixed.end()) {
            throw std::invalid_argument("parameter " + name + " is not set");
        }
        return it->second;
    }

    double real_or(const std::string &name, double fallback) const {
        for (const auto &[key, v] : coordinates_) {
            if (key == name) {
                return v;
            }
        }
        auto it = spec_.fixed.find(name);
        return it == spec_.fixed.end() ? fallback : it->second;
    }

    int integer(const std::string &name) const {
        double v = real(name);
        double r = std::round(v);
        if (std::abs(v - r) > 1e-9 || std::abs(r) > 1e9) {
            throw std::invalid_argument(name + " must be an integer, got " + format_real(v));
        }
        return static_cast<int>(r);
    }

   private:
    const SweepSpec &spec_;
    const std::vector<std::pair<std::string, double>> &coordinates_;
};

void evaluate(const SweepSpec &spec, SweepRecord &rec) {
    Cell cell(spec, rec.coordinates);
    auto set_order = [&](const std::optional<int> &order) {
        if (order) {
            rec.value = *order;
        } else {
            rec.status = CellStatus::kNone;
        }
    };
    switch (spec.quantity) {
        case Quantity::kLnp: {
            double nbar = cell.real("nbar");
            int dim = required_dim(nbar, cell.real_or("tail_tol", kEntanglementTailTolerance));
            rec.value = lnp(output_number_stats(nbar, cell.real("pe"), cell.real("gt"), dim));
            return;
        }
        case Quantity::kLnpFiltered: {
            double nbar = cell.real("nbar");
            int dim = required_dim(nbar, cell.real_or("tail_tol", kEntanglementTailTolerance));
            NumberDistribution p = output_number_stats(nbar, cell.real("pe"), cell.real("gt"), dim);
            FilteredLnp f = lnp_filtered(p, cell.integer("D_f"));
            rec.value = f.lnp;
            rec.aux["p_success"] = f.success_probability;
            return;
        }
        case Quantity::kLnpRepeat: {
            double nbar = cell.real("nbar");
            int dim = required_dim(nbar, cell.real_or("tail_tol", kEntanglementTailTolerance));
            NumberDistribution p = repeat_absorption(thermal_distribution(nbar, dim), cell.real("gt"), cell.integer("M"));
            rec.value = lnp(p);
            return;
        }
        case Quantity::kKlyshkoMinOrder:
            set_order(klyshko_first_violation(cell.real("nbar"), cell.real("pe"), cell.real("gt"), cell.integer("order")));
            return;
        case Quantity::kKlyshkoRobustMinOrder: {
            MeasurementModel model;
            model.sigma = cell.real("sigma");
            model.populations = cell.integer("populations");
            int top = cell.integer("order");
            model.orders.clear();
            for (int n = 1; n <= top; ++n) {
                model.orders.push_back(n);
            }
            model.validate();
            double nbar = cell.real("nbar");
            NumberDistribution p = output_number_stats(nbar, 0.0, cell.real("gt"), robust_dim(nbar, model));
            set_order(robust_first_violation(p, model));
            return;
        }
        case Quantity::kAsymptoticPeStar: {
            AsymptoticResult r = search_max_pe(cell.integer("order"), GtInterval{cell.real("gt_min"), cell.real("gt_max")},
                                               cell.real("resolution"));
            rec.aux["bound"] = r.bound;
            if (!r.detected) {
                rec.status = CellStatus::kNone;
                return;
            }
            rec.value = r.pe_star;
            rec.aux["gt_star"] = r.gt_star;
            rec.aux["f_lo"] = r.f_triple[0];
            rec.aux["f_mid"] = r.f_triple[1];
            rec.aux["f_hi"] = r.f_triple[2];
            return;
        }
    }
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

double parse_real(const std::string &s) {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument("malformed number '" + s + "'");
    }
    return v;
}

}  // namespace

std::string_view quantity_name(Quantity q) {
    return info(q).name;
}

Quantity parse_quantity(std::string_view name) {
    for (const auto &entry : quantity_table()) {
        if (entry.name == name) {
            return entry.quantity;
        }
    }
    throw std::invalid_argument("unknown quantity '" + std::string(name) + "'");
}

std::vector<std::string> required_parameters(Quantity q) {
    return info(q).params;
}

void SweepSpec::validate() const {
    std::set<std::string> seen;
    for (const auto &axis : axes) {
        if (!kAxisNames.count(axis.name)) {
            throw std::invalid_argument("unknown axis name '" + axis.name + "'");
        }
        if (!seen.insert(axis.name).second) {
            throw std::invalid_argument("axis '" + axis.name + "' listed twice");
        }
        axis.range.validate();
    }
    for (const auto &[name, value] : fixed) {
        if (!kAxisNames.count(name) && !kFixedOnlyNames.count(name)) {
            throw std::invalid_argument("unknown parameter '" + name + "'");
        }
        if (seen.count(name)) {
            throw std::invalid_argument("parameter '" + name + "' is both an axis and fixed");
        }
        if (!std::isfinite(value)) {
            throw std::invalid_argument("parameter '" + name + "' is not finite");
        }
        if (kIntegerNames.count(name) && value != std::floor(value)) {
            throw std::invalid_argument("parameter '" + name + "' must be an integer, got " + format_real(value));
        }
        seen.insert(name);
    }
    for (const auto &param : required_parameters(quantity)) {
        if (!seen.count(param)) {
            throw std::invalid_argument("quantity " + std::string(quantity_name(quantity)) + " needs parameter '" +
                                        param + "'");
        }
    }
}

std::size_t SweepSpec::cell_count() const {
    std::size_t count = 1;
    for (const auto &axis : axes) {
        count *= axis.range.size();
    }
    return count;
}

std::vector<SweepRecord> run_sweep(const SweepSpec &spec, int workers) {
    spec.validate();
    std::vector<std::vector<double>> values;
    for (const auto &axis : spec.axes) {
        values.push_back(axis.range.values());
    }
    std::vector<SweepRecord> records(spec.cell_count());
    for (std::size_t cell = 0; cell < records.size(); ++cell) {
        std::size_t rest = cell;
        auto &coords = records[cell].coordinates;
        coords.resize(spec.axes.size());
        for (std::size_t a = spec.axes.size(); a-- > 0;) {
            std::size_t len = values[a].size();
            coords[a] = {spec.axes[a].name, values[a][rest % len]};
            rest /= len;
        }
    }
    parallel_for(records.size(), workers, [&](std::size_t cell) {
        SweepRecord &rec = records[cell];
        try {
            evaluate(spec, rec);
        } catch (const std::exception &e) {
            rec.status = CellStatus::kError;
            rec.value = 0;
            rec.aux.clear();
            rec.error = e.what();
        }
    });
    return records;
}

std::size_t error_count(const std::vector<SweepRecord> &records) {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const SweepRecord &r) {
        return r.status == CellStatus::kError;
    }));
}

std::string format_real(double x) {
    if (x == 0) {
        x = 0;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_csv(const std::vector<SweepRecord> &records) {
    if (records.empty()) {
        throw std::invalid_argument("no records to format");
    }
    std::set<std::string> aux_names;
    for (const auto &r : records) {
        for (const auto &[name, v] : r.aux) {
            aux_names.insert(name);
        }
    }
    std::string out;
    for (const auto &[name, v] : records.front().coordinates) {
        out += name;
        out += ',';
    }
    out += "value";
    for (const auto &name : aux_names) {
        out += ',';
        out += name;
    }
    out += '\n';
    for (const auto &r : records) {
        for (const auto &[name, v] : r.coordinates) {
            out += format_real(v);
            out += ',';
        }
        switch (r.status) {
            case CellStatus::kValue:
                out += format_real(r.value);
                break;
            case CellStatus::kNone:
                break;
            case CellStatus::kError:
                out += "error";
                break;
        }
        for (const auto &name : aux_names) {
            out += ',';
            auto it = r.aux.find(name);
            if (it != r.aux.end()) {
                out += format_real(it->second);
            }
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::vector<SweepRecord> &records, const std::string &path, std::ostream &stdout_stream) {
    std::string text = format_csv(records);
    if (path == "-") {
        stdout_stream << text << std::flush;
        if (!stdout_stream) {
            throw IoError("failed writing to standard output");
        }
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << text;
    out.close();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

std::vector<SweepRecord> parse_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("empty CSV");
    }
    std::vector<std::string> header = split(line, ',');
    auto value_it = std::find(header.begin(), header.end(), "value");
    if (value_it == header.end()) {
        throw std::invalid_argument("CSV header has no value column");
    }
    std::size_t value_col = static_cast<std::size_t>(value_it - header.begin());
    std::vector<SweepRecord> records;
    while (std::getline(in, line)) {
        std::vector<std::string> fields = split(line, ',');
        if (fields.size() != header.size()) {
            throw std::invalid_argument("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                                        std::to_string(header.size()));
        }
        SweepRecord r;
        for (std::size_t i = 0; i < value_col; ++i) {
            r.coordinates.emplace_back(header[i], parse_real(fields[i]));
        }
        const std::string &v = fields[value_col];
        if (v.empty()) {
            r.status = CellStatus::kNone;
        } else if (v == "error") {
            r.status = CellStatus::kError;
        } else {
            r.value = parse_real(v);
        }
        for (std::size_t i = value_col + 1; i < header.size(); ++i) {
            if (!fields[i].empty()) {
                r.aux[header[i]] = parse_real(fields[i]);
            }
        }
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace jctherm
