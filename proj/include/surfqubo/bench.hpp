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

#ifndef SURFQUBO_BENCH_HPP
#define SURFQUBO_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "surfqubo/decode.hpp"

namespace surfqubo {

enum class ExperimentKind { scaling, threshold, demo, ground_state_stats };

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string &text);

inline constexpr int kSpecSchemaVersion = 1;

/// One experiment family plus every knob it needs. Text form is flat
/// "key = value" lines; see write_spec for the full key list.
struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::scaling;
    std::vector<int> distances;
    std::vector<double> error_rates;
    int trials = 100;
    std::vector<DecodeMethod> methods{DecodeMethod::da};
    DecoderParams params;  // anneal is the DA configuration
    AnnealConfig sa_anneal;  // SA budget and schedule
    int max_chain_length = 0;  // 0 skips the J > n h / 2 check
    std::uint64_t seed = 0;
    int workers = 1;
    std::string output = "results.csv";
    std::string plot;  // empty: no SVG
    double p_th = 0.096;
    double fit_p_low = 0.04;
    double fit_p_high = 0.08;

    void validate() const;
};

/// Table I (benchmarks) or Table IV (demo) presets for the given kind.
ExperimentSpec default_spec(ExperimentKind kind);

/// Parses key = value text on top of default_spec(kind). Throws
/// std::invalid_argument with a line number on bad input.
ExperimentSpec parse_spec(std::istream &in, ExperimentKind kind);
ExperimentSpec load_spec(const std::string &path, ExperimentKind kind);
void write_spec(std::ostream &out, const ExperimentSpec &spec);

struct ResultRecord {
    int d = 0;
    std::size_t n_data = 0;
    double p = 0.0;
    DecodeMethod method = DecodeMethod::da;
    int trial = 0;
    std::uint64_t seed = 0;
    bool syndrome_satisfied = false;
    bool logical_error = false;
    bool ground_state_proxy = false;
    std::int64_t iterations = 0;
    Energy energy = 0;

    // Not part of the CSV schema.
    std::size_t estimate_weight = 0;
    std::size_t actual_weight = 0;
    int exact_ground = -1;  // 1/0 when the exhaustive oracle ran, else -1
};

void write_csv(std::ostream &out, const std::vector<ResultRecord> &records);
std::vector<ResultRecord> read_csv(std::istream &in);

/// Per-trial seed; identical for every method so all decoders see the
/// same error pattern.
std::uint64_t trial_seed(std::uint64_t master, int d, double p, int trial);

/// Runs every (d, p, trial, method) job. Rows come back ordered by
/// (d, p, trial, method) for any worker count.
std::vector<ResultRecord> run_trials(const ExperimentSpec &spec);

struct LogLogFit {
    double exponent = 0.0;
    double intercept = 0.0;
};

/// Least squares on (log N, log y). Needs at least 3 points, all positive.
LogLogFit fit_loglog_exponent(const std::vector<std::pair<double, double>> &points);

struct ScalingPoint {
    DecodeMethod method;
    double p;
    int d;
    std::size_t n_data;
    int trials;
    double mean_iterations;
    double satisfied_fraction;
};

struct ScalingFit {
    DecodeMethod method = DecodeMethod::da;
    double p = 0.0;
    bool ok = false;
    LogLogFit fit;
    std::string note;
};

struct ScalingReport {
    std::vector<ResultRecord> records;
    std::vector<ScalingPoint> points;
    std::vector<ScalingFit> fits;
};

ScalingReport summarize_scaling(std::vector<ResultRecord> records);
ScalingReport run_scaling(const ExperimentSpec &spec);

struct RateCell {
    DecodeMethod method;
    int d;
    double p;
    int trials;
    int failures;
    double rate;
    double stderr_;
};

struct ThresholdBracket {
    DecodeMethod method;
    int d_small;
    int d_large;
    bool found = false;
    double lower = 0.0;
    double upper = 0.0;
};

struct ThresholdReport {
    std::vector<ResultRecord> records;
    std::vector<RateCell> cells;
    std::vector<ThresholdBracket> brackets;  // (d_min, d_max) first, then adjacent pairs
};

double binomial_stderr(int successes, int trials);

/// Interval between the two error rates where P_L(d_large) - P_L(d_small)
/// turns and stays positive.
ThresholdBracket bracket_crossing(const std::vector<RateCell> &cells, DecodeMethod method, int d_small, int d_large);

ThresholdReport summarize_threshold(std::vector<ResultRecord> records);
ThresholdReport run_threshold(const ExperimentSpec &spec);

inline int effective_distance(int d) { return (d + 1) / 2; }

struct PowerLawFit {
    double c1 = 0.0;
    double c2 = 0.0;
    std::size_t points_used = 0;
};

/// Fits log P_L = log c1 + c2 d_e log(p / p_th) over p in [p_low, p_high].
/// Cells with P_L = 0 carry no log value and are skipped.
PowerLawFit fit_power_law(const std::vector<RateCell> &cells, double p_th, double p_low = 0.04, double p_high = 0.08);

struct GroundStatsCell {
    DecodeMethod method;
    int d;
    double p;
    int trials;
    double proxy_fraction;
    double proxy_stderr;
    double exact_fraction;  // -1 when the oracle did not run
    double mean_iterations_ground;
    double mean_iterations_excited;
    int ground_count;
    int excited_count;
};

struct GroundStatsReport {
    std::vector<ResultRecord> records;
    std::vector<GroundStatsCell> cells;
};

GroundStatsReport summarize_ground_stats(std::vector<ResultRecord> records);
GroundStatsReport run_ground_state_stats(const ExperimentSpec &spec);

struct DemoResult {
    ResultRecord record;
    ErrorPattern actual;
    ErrorPattern estimate;
    Syndrome syndrome;
    ResidualClass residual = ResidualClass::trivial;
    Energy actual_energy = 0;
    Energy mwpm_energy = 0;
};

/// One decode per (d, p, trial, method) with full patterns kept for plotting.
std::vector<DemoResult> run_demo(const ExperimentSpec &spec);

// SVG renderings derived from the tables above.
void plot_scaling(std::ostream &out, const ScalingReport &report);
void plot_threshold(std::ostream &out, const ThresholdReport &report);
void plot_ground_stats(std::ostream &out, const GroundStatsReport &report);
void plot_demo(std::ostream &out, const CodeLattice &lattice, const DemoResult &demo);

}  // namespace surfqubo

#endif  // SURFQUBO_BENCH_HPP
