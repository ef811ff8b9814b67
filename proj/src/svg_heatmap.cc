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

#include "jctherm/svg_heatmap.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "jctherm/errors.h"

namespace jctherm {

namespace {

constexpr int kCell = 6;
constexpr int kMargin = 60;

std::vector<double> distinct_in_order(const std::vector<SweepRecord> &records, std::size_t axis) {
    std::vector<double> out;
    for (const auto &r : records) {
        double v = r.coordinates[axis].second;
        if (std::find(out.begin(), out.end(), v) == out.end()) {
            out.push_back(v);
        }
    }
    return out;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg_heatmap(const std::vector<SweepRecord> &records, const std::string &title) {
    if (records.empty() || records.front().coordinates.size() != 2) {
        throw std::invalid_argument("heatmap needs records from a two-axis sweep");
    }
    std::vector<double> rows = distinct_in_order(records, 0);
    std::vector<double> cols = distinct_in_order(records, 1);
    if (rows.size() * cols.size() != records.size()) {
        throw std::invalid_argument("records do not form a full grid");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto &r : records) {
        if (r.status == CellStatus::kValue) {
            lo = std::min(lo, r.value);
            hi = std::max(hi, r.value);
        }
    }
    const int width = static_cast<int>(cols.size()) * kCell + 2 * kMargin;
    const int height = static_cast<int>(rows.size()) * kCell + 2 * kMargin;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kMargin << "\" y=\"" << kMargin / 2 << "\" font-family=\"sans-serif\" font-size=\"14\">"
        << escape(title) << "</text>\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const SweepRecord &r = records[i];
        std::size_t row = i / cols.size();
        std::size_t col = i % cols.size();
        int x = kMargin + static_cast<int>(col) * kCell;
        int y = height - kMargin - static_cast<int>(row + 1) * kCell;
        std::string fill;
        if (r.status == CellStatus::kNone) {
            fill = "#cce0ff";
        } else if (r.status == CellStatus::kError) {
            fill = "#ff0000";
        } else {
            double t = hi > lo ? (r.value - lo) / (hi - lo) : 0.0;
            int g = static_cast<int>(std::lround(255 * (1 - t)));
            char buf[16];
            std::snprintf(buf, sizeof buf, "#%02x%02x%02x", g, g, g);
            fill = buf;
        }
        svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell << "\" height=\"" << kCell
            << "\" fill=\"" << fill << "\"/>\n";
    }
    const std::string &row_name = records.front().coordinates[0].first;
    const std::string &col_name = records.front().coordinates[1].first;
    svg << "<text x=\"" << width / 2 << "\" y=\"" << height - kMargin / 3
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(col_name) << " [" << format_real(cols.front())
        << ", " << format_real(cols.back()) << "]</text>\n";
    svg << "<text x=\"10\" y=\"" << height / 2 << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(row_name)
        << " [" << format_real(rows.front()) << ", " << format_real(rows.back()) << "]</text>\n";
    if (lo <= hi) {
        svg << "<text x=\"" << kMargin << "\" y=\"" << height - 5 << "\" font-family=\"sans-serif\" font-size=\"10\">"
            << "white=" << format_real(lo) << " black=" << format_real(hi) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_svg_heatmap(const std::vector<SweepRecord> &records, const std::string &title, const std::string &path) {
    std::string text = render_svg_heatmap(records, title);
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

}  // namespace jctherm
