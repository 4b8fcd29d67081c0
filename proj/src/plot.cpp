// Copyright 2026 The surfqubo Authors
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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <string>

#include "surfqubo/bench.hpp"

namespace surfqubo {

namespace {

const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

struct Point {
    double x, y, err;
};

struct Series {
    std::string label;
    std::vector<Point> points;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

class Chart {
  public:
    std::string title, xlabel, ylabel;
    bool log_x = false, log_y = false;
    std::vector<Series> series;

    void render(std::ostream &out) const {
        double x0 = inf, x1 = -inf, y0 = inf, y1 = -inf;
        for (const auto &s : series) {
            for (const auto &p : s.points) {
                if (!usable(p.x, log_x)) {
                    continue;
                }
                x0 = std::min(x0, p.x);
                x1 = std::max(x1, p.x);
                for (double y : {p.y - p.err, p.y + p.err, p.y}) {
                    if (usable(y, log_y)) {
                        y0 = std::min(y0, y);
                        y1 = std::max(y1, y);
                    }
                }
            }
        }
        if (!(x0 <= x1)) {
            x0 = log_x ? 1 : 0;
            x1 = x0 + 1;
        }
        if (!(y0 <= y1)) {
            y0 = log_y ? 1 : 0;
            y1 = y0 + 1;
        }
        auto [xa, xb] = padded(x0, x1, log_x);
        auto [ya, yb] = padded(y0, y1, log_y);

        auto px = [&](double x) { return kLeft + (tr(x, log_x) - tr(xa, log_x)) / (tr(xb, log_x) - tr(xa, log_x)) * kPlotW; };
        auto py = [&](double y) {
            return kTop + kPlotH - (tr(y, log_y) - tr(ya, log_y)) / (tr(yb, log_y) - tr(ya, log_y)) * kPlotH;
        };

        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
            << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
        out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
            << "</text>\n";
        out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kPlotW << "\" height=\"" << kPlotH
            << "\" fill=\"none\" stroke=\"black\"/>\n";
        for (double t : ticks(xa, xb, log_x)) {
            out << "<line x1=\"" << px(t) << "\" y1=\"" << kTop + kPlotH << "\" x2=\"" << px(t) << "\" y2=\""
                << kTop + kPlotH + 5 << "\" stroke=\"black\"/>";
            out << "<text x=\"" << px(t) << "\" y=\"" << kTop + kPlotH + 18 << "\" text-anchor=\"middle\">" << num(t)
                << "</text>\n";
        }
        for (double t : ticks(ya, yb, log_y)) {
            out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << py(t) << "\" x2=\"" << kLeft << "\" y2=\"" << py(t)
                << "\" stroke=\"black\"/>";
            out << "<text x=\"" << kLeft - 8 << "\" y=\"" << py(t) + 4 << "\" text-anchor=\"end\">" << num(t)
                << "</text>\n";
        }
        out << "<text x=\"" << kLeft + kPlotW / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\">"
            << escape(xlabel) << "</text>\n";
        out << "<text transform=\"translate(16," << kTop + kPlotH / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
            << escape(ylabel) << "</text>\n";

        for (std::size_t si = 0; si < series.size(); si++) {
            const auto &s = series[si];
            const char *color = kPalette[si % std::size(kPalette)];
            std::string path;
            for (const auto &p : s.points) {
                if (!usable(p.x, log_x) || !usable(p.y, log_y)) {
                    continue;
                }
                path += (path.empty() ? "M" : " L") + num(px(p.x)) + "," + num(py(p.y));
                if (p.err > 0) {
                    const double lo = usable(p.y - p.err, log_y) ? p.y - p.err : p.y;
                    out << "<line x1=\"" << px(p.x) << "\" y1=\"" << py(lo) << "\" x2=\"" << px(p.x) << "\" y2=\""
                        << py(p.y + p.err) << "\" stroke=\"" << color << "\"/>";
                }
                out << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"3\" fill=\"" << color
                    << "\"/>\n";
            }
            if (!path.empty()) {
                out << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << color << "\"/>\n";
            }
            const double ly = kTop + 14 + 16 * static_cast<double>(si);
            out << "<rect x=\"" << kLeft + kPlotW + 12 << "\" y=\"" << ly - 9 << "\" width=\"10\" height=\"10\" fill=\""
                << color << "\"/><text x=\"" << kLeft + kPlotW + 28 << "\" y=\"" << ly << "\">" << escape(s.label)
                << "</text>\n";
        }
        out << "</svg>\n";
    }

  private:
    static constexpr double inf = std::numeric_limits<double>::infinity();
    static constexpr double kWidth = 760, kHeight = 460, kLeft = 70, kTop = 36, kPlotW = 520, kPlotH = 370;

    static bool usable(double v, bool log) { return std::isfinite(v) && (!log || v > 0); }
    static double tr(double v, bool log) { return log ? std::log10(v) : v; }

    static std::pair<double, double> padded(double a, double b, bool log) {
        if (log) {
            return {std::pow(10.0, std::floor(std::log10(a))), std::pow(10.0, std::ceil(std::log10(b) + 1e-12))};
        }
        const double pad = a == b ? 1.0 : 0.05 * (b - a);
        return {a - pad, b + pad};
    }

    static std::vector<double> ticks(double a, double b, bool log) {
        std::vector<double> out;
        if (log) {
            for (double t = a; t <= b * 1.0001; t *= 10) {
                out.push_back(t);
            }
            return out;
        }
        const double raw = (b - a) / 6;
        const double mag = std::pow(10.0, std::floor(std::log10(raw)));
        double step = mag;
        for (double m : {1.0, 2.0, 5.0, 10.0}) {
            if (m * mag >= raw) {
                step = m * mag;
                break;
            }
        }
        for (double t = std::ceil(a / step) * step; t <= b + 1e-9 * step; t += step) {
            out.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
        }
        return out;
    }
};

}  // namespace

void plot_scaling(std::ostream &out, const ScalingReport &report) {
    Chart c;
    c.title = "Iterations at final best energy vs number of data qubits";
    c.xlabel = "N_d";
    c.ylabel = "mean iterations";
    c.log_x = c.log_y = true;
    std::map<std::pair<int, double>, Series> by;
    for (const auto &p : report.points) {
        auto &s = by[{static_cast<int>(p.method), p.p}];
        if (s.label.empty()) {
            s.label = to_string(p.method) + " p=" + num(100 * p.p) + "%";
            for (const auto &f : report.fits) {
                if (f.method == p.method && f.p == p.p && f.ok) {
                    s.label += " (" + num(f.fit.exponent) + ")";
                }
            }
        }
        s.points.push_back({static_cast<double>(p.n_data), p.mean_iterations, 0.0});
    }
    for (auto &[k, s] : by) {
        c.series.push_back(std::move(s));
    }
    c.render(out);
}

void plot_threshold(std::ostream &out, const ThresholdReport &report) {
    Chart c;
    c.title = "Logical error rate";
    c.xlabel = "physical error rate p";
    c.ylabel = "P_L";
    std::map<std::pair<int, int>, Series> by;
    for (const auto &cell : report.cells) {
        auto &s = by[{static_cast<int>(cell.method), cell.d}];
        s.label = to_string(cell.method) + " d=" + std::to_string(cell.d);
        s.points.push_back({cell.p, cell.rate, cell.stderr_});
    }
    for (auto &[k, s] : by) {
        c.series.push_back(std::move(s));
    }
    c.render(out);
}

void plot_ground_stats(std::ostream &out, const GroundStatsReport &report) {
    Chart c;
    c.title = "Fraction of decodes at or below the actual error weight";
    c.xlabel = "code distance d";
    c.ylabel = "ground-state proxy fraction";
    std::map<std::pair<int, double>, Series> by;
    for (const auto &cell : report.cells) {
        auto &s = by[{static_cast<int>(cell.method), cell.p}];
        s.label = to_string(cell.method) + " p=" + num(100 * cell.p) + "%";
        s.points.push_back({static_cast<double>(cell.d), cell.proxy_fraction, cell.proxy_stderr});
    }
    for (auto &[k, s] : by) {
        c.series.push_back(std::move(s));
    }
    c.render(out);
}

void plot_demo(std::ostream &out, const CodeLattice &lattice, const DemoResult &demo) {
    const int n = 2 * lattice.distance() - 1;
    const double unit = std::max(6.0, 640.0 / n);
    const double margin = 20;
    const double size = unit * (n - 1) + 2 * margin;
    auto at = [&](int rc) { return margin + unit * rc; };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size + 30
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // Faint guide lines through the vertex rows and columns.
    for (int r = 1; r < n; r += 2) {
        out << "<line x1=\"" << at(0) << "\" y1=\"" << at(r) << "\" x2=\"" << at(n - 1) << "\" y2=\"" << at(r)
            << "\" stroke=\"#dddddd\"/>";
    }
    for (int c = 0; c < n; c += 2) {
        out << "<line x1=\"" << at(c) << "\" y1=\"" << at(0) << "\" x2=\"" << at(c) << "\" y2=\"" << at(n - 1)
            << "\" stroke=\"#dddddd\"/>";
    }
    out << "\n";
    const double big = unit * 0.8, small = unit * 0.45, open = unit * 0.7;
    for (auto v : demo.syndrome.defects()) {
        auto g = lattice.vertex_coord(v);
        out << "<rect x=\"" << at(g.col) - big / 2 << "\" y=\"" << at(g.row) - big / 2 << "\" width=\"" << big
            << "\" height=\"" << big << "\" fill=\"black\"/>\n";
    }
    for (std::size_t q = 0; q < lattice.num_data(); q++) {
        auto g = lattice.qubit_coord(q);
        if (demo.actual.bits[q]) {
            out << "<rect x=\"" << at(g.col) - small / 2 << "\" y=\"" << at(g.row) - small / 2 << "\" width=\""
                << small << "\" height=\"" << small << "\" fill=\"#d62728\"/>\n";
        }
        if (demo.estimate.bits[q]) {
            out << "<rect x=\"" << at(g.col) - open / 2 << "\" y=\"" << at(g.row) - open / 2 << "\" width=\"" << open
                << "\" height=\"" << open << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
        }
    }
    out << "<text x=\"" << margin << "\" y=\"" << size + 18 << "\">d=" << lattice.distance()
        << " p=" << num(demo.record.p) << " method=" << to_string(demo.record.method)
        << " satisfied=" << demo.record.syndrome_satisfied << " residual=" << to_string(demo.residual)
        << " E=" << demo.record.energy << " E_actual=" << demo.actual_energy << "</text>\n</svg>\n";
}

}  // namespace surfqubo
