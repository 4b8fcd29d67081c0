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

// Command-line front end for the experiment harness.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "surfqubo/bench.hpp"

using namespace surfqubo;

namespace {

struct CommonOptions {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string plot;
    std::string summary;
    std::optional<int> workers;
    std::optional<int> trials;
    bool dump_config = false;
};

void add_common(CLI::App *cmd, CommonOptions &o) {
    cmd->add_option("--config", o.config, "key = value experiment config (defaults: paper presets)");
    cmd->add_option("--seed", o.seed, "master seed (overrides config)");
    cmd->add_option("--out", o.out, "output CSV path (overrides config)");
    cmd->add_option("--plot", o.plot, "SVG path (overrides config)");
    cmd->add_option("--summary", o.summary, "also write the text summary here");
    cmd->add_option("--workers", o.workers, "worker threads (overrides config)")->check(CLI::PositiveNumber);
    cmd->add_option("--trials", o.trials, "trials per cell (overrides config)")->check(CLI::PositiveNumber);
    cmd->add_flag("--dump-config", o.dump_config, "print the effective config and exit");
}

ExperimentSpec resolve_spec(ExperimentKind kind, const CommonOptions &o) {
    auto spec = o.config.empty() ? default_spec(kind) : load_spec(o.config, kind);
    if (o.seed) {
        spec.seed = *o.seed;
    }
    if (!o.out.empty()) {
        spec.output = o.out;
    }
    if (!o.plot.empty()) {
        spec.plot = o.plot;
    }
    if (o.workers) {
        spec.workers = *o.workers;
    }
    if (o.trials) {
        spec.trials = *o.trials;
    }
    spec.validate();
    return spec;
}

std::ofstream open_out(const std::string &path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    return f;
}

void save_csv(const std::string &path, const std::vector<ResultRecord> &records) {
    auto f = open_out(path);
    write_csv(f, records);
    f.close();
    if (!f) {
        throw std::runtime_error("failed writing " + path);
    }
}

template <typename Plotter>
void save_plot(const std::string &path, Plotter &&plot) {
    if (path.empty()) {
        return;
    }
    auto f = open_out(path);
    plot(f);
    if (!f) {
        throw std::runtime_error("failed writing " + path);
    }
}

void emit_summary(const std::string &text, const std::string &path) {
    std::cout << text;
    if (!path.empty()) {
        auto f = open_out(path);
        f << text;
    }
}

std::string pct(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g%%", 100 * p);
    return buf;
}

std::string describe_scaling(const ScalingReport &rep) {
    std::ostringstream s;
    s << "method p d N_d trials mean_iterations satisfied\n";
    for (const auto &pt : rep.points) {
        s << to_string(pt.method) << ' ' << pct(pt.p) << ' ' << pt.d << ' ' << pt.n_data << ' ' << pt.trials << ' '
          << pt.mean_iterations << ' ' << pt.satisfied_fraction << "\n";
    }
    s << "fits (log mean_iterations vs log N_d):\n";
    for (const auto &f : rep.fits) {
        s << "  " << to_string(f.method) << " p=" << pct(f.p) << ": ";
        if (f.ok) {
            s << "exponent " << f.fit.exponent << " intercept " << f.fit.intercept;
        } else {
            s << "no fit";
        }
        if (!f.note.empty()) {
            s << " (" << f.note << ")";
        }
        s << "\n";
    }
    return s.str();
}

std::string describe_threshold(const ThresholdReport &rep) {
    std::ostringstream s;
    s << "method d p trials failures P_L stderr\n";
    for (const auto &c : rep.cells) {
        s << to_string(c.method) << ' ' << c.d << ' ' << pct(c.p) << ' ' << c.trials << ' ' << c.failures << ' '
          << c.rate << ' ' << c.stderr_ << "\n";
    }
    for (const auto &b : rep.brackets) {
        s << "crossing " << to_string(b.method) << " d=" << b.d_small << " vs d=" << b.d_large << ": ";
        if (b.found) {
            s << "[" << pct(b.lower) << ", " << pct(b.upper) << "]\n";
        } else if (b.upper > 0) {
            s << "below " << pct(b.upper) << "\n";
        } else {
            s << "above " << pct(b.lower) << " or absent\n";
        }
    }
    return s.str();
}

std::string describe_ground(const GroundStatsReport &rep) {
    std::ostringstream s;
    s << "method d p trials proxy_fraction stderr exact_fraction mean_iter_ground mean_iter_excited\n";
    for (const auto &c : rep.cells) {
        s << to_string(c.method) << ' ' << c.d << ' ' << pct(c.p) << ' ' << c.trials << ' ' << c.proxy_fraction << ' '
          << c.proxy_stderr << ' ';
        if (c.exact_fraction >= 0) {
            s << c.exact_fraction;
        } else {
            s << "n/a";
        }
        s << ' ' << c.mean_iterations_ground << ' ' << c.mean_iterations_excited << "\n";
    }
    return s.str();
}

std::string describe_fit(const std::vector<ResultRecord> &records, const ExperimentSpec &spec) {
    std::ostringstream s;
    auto scaling = summarize_scaling(records);
    auto threshold = summarize_threshold(records);
    s << describe_scaling(scaling) << describe_threshold(threshold);
    std::map<std::pair<int, int>, std::vector<RateCell>> by;
    for (const auto &c : threshold.cells) {
        by[{static_cast<int>(c.method), c.d}].push_back(c);
    }
    s << "power law (p_th=" << pct(spec.p_th) << ", window " << pct(spec.fit_p_low) << ".." << pct(spec.fit_p_high)
      << "):\n";
    for (const auto &[key, cells] : by) {
        s << "  " << to_string(static_cast<DecodeMethod>(key.first)) << " d=" << key.second << ": ";
        try {
            auto f = fit_power_law(cells, spec.p_th, spec.fit_p_low, spec.fit_p_high);
            s << "c1 " << f.c1 << " c2 " << f.c2 << " (" << f.points_used << " points)\n";
        } catch (const std::domain_error &e) {
            s << e.what() << "\n";
        }
    }
    return s.str();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"surface code QUBO decoding experiments"};
    app.require_subcommand(1);

    CommonOptions scaling_o, threshold_o, demo_o, ground_o, fit_o;
    auto *scaling = app.add_subcommand("scaling", "iterations-at-best vs code size");
    add_common(scaling, scaling_o);
    auto *threshold = app.add_subcommand("threshold", "logical error rates and threshold bracket");
    add_common(threshold, threshold_o);
    auto *demo = app.add_subcommand("demo", "single decodes rendered as lattice pictures");
    add_common(demo, demo_o);
    auto *ground = app.add_subcommand("ground-stats", "ground-state proxy statistics");
    add_common(ground, ground_o);
    auto *fit = app.add_subcommand("fit", "refit exponents, brackets and power laws from a CSV");
    add_common(fit, fit_o);
    std::string fit_csv;
    fit->add_option("--csv", fit_csv, "result CSV to fit")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (fit->parsed()) {
            auto spec = resolve_spec(ExperimentKind::threshold, fit_o);
            std::ifstream in(fit_csv);
            if (!in) {
                throw std::runtime_error("cannot open " + fit_csv);
            }
            auto text = describe_fit(read_csv(in), spec);
            emit_summary(text, fit_o.out.empty() ? fit_o.summary : fit_o.out);
            return 0;
        }

        const std::pair<CLI::App *, std::pair<ExperimentKind, CommonOptions *>> verbs[] = {
            {scaling, {ExperimentKind::scaling, &scaling_o}},
            {threshold, {ExperimentKind::threshold, &threshold_o}},
            {demo, {ExperimentKind::demo, &demo_o}},
            {ground, {ExperimentKind::ground_state_stats, &ground_o}},
        };
        for (const auto &[cmd, kv] : verbs) {
            if (!cmd->parsed()) {
                continue;
            }
            const auto &o = *kv.second;
            auto spec = resolve_spec(kv.first, o);
            if (o.dump_config) {
                write_spec(std::cout, spec);
                return 0;
            }
            switch (kv.first) {
                case ExperimentKind::scaling: {
                    auto rep = run_scaling(spec);
                    save_csv(spec.output, rep.records);
                    save_plot(spec.plot, [&](std::ostream &f) { plot_scaling(f, rep); });
                    emit_summary(describe_scaling(rep), o.summary);
                    break;
                }
                case ExperimentKind::threshold: {
                    auto rep = run_threshold(spec);
                    save_csv(spec.output, rep.records);
                    save_plot(spec.plot, [&](std::ostream &f) { plot_threshold(f, rep); });
                    emit_summary(describe_threshold(rep), o.summary);
                    break;
                }
                case ExperimentKind::ground_state_stats: {
                    auto rep = run_ground_state_stats(spec);
                    save_csv(spec.output, rep.records);
                    save_plot(spec.plot, [&](std::ostream &f) { plot_ground_stats(f, rep); });
                    emit_summary(describe_ground(rep), o.summary);
                    break;
                }
                case ExperimentKind::demo: {
                    auto results = run_demo(spec);
                    std::vector<ResultRecord> records;
                    std::ostringstream s;
                    for (std::size_t i = 0; i < results.size(); i++) {
                        const auto &r = results[i];
                        records.push_back(r.record);
                        s << "d=" << r.record.d << " p=" << pct(r.record.p) << " trial=" << r.record.trial
                          << " method=" << to_string(r.record.method) << " satisfied=" << r.record.syndrome_satisfied
                          << " residual=" << to_string(r.residual) << " energy=" << r.record.energy
                          << " actual_energy=" << r.actual_energy << " mwpm_energy=" << r.mwpm_energy
                          << " iterations=" << r.record.iterations << " errors=" << r.record.actual_weight
                          << " estimate=" << r.record.estimate_weight << "\n";
                        if (!spec.plot.empty()) {
                            auto path = spec.plot;
                            if (results.size() > 1) {
                                auto dot = path.rfind('.');
                                auto suffix = "_" + std::to_string(i);
                                path = dot == std::string::npos ? path + suffix : path.insert(dot, suffix);
                            }
                            save_plot(path, [&](std::ostream &f) { plot_demo(f, build_lattice(r.record.d), r); });
                        }
                    }
                    save_csv(spec.output, records);
                    emit_summary(s.str(), o.summary);
                    break;
                }
            }
            return 0;
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
