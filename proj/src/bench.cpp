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
#include <charconv>
#include <cmath>
#include <exception>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "surfqubo/bench.hpp"
#include "surfqubo/mwpm.hpp"
#include "surfqubo/rng.hpp"

namespace surfqubo {

namespace {

const char *kCsvHeader = "d,N_d,p,method,trial,seed,syndrome_satisfied,logical_error,ground_state_proxy,iterations,energy";

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

struct Job {
    int d;
    double p;
    int trial;
    DecodeMethod method;
};

std::vector<Job> enumerate_jobs(const ExperimentSpec &spec) {
    auto distances = spec.distances;
    auto rates = spec.error_rates;
    std::sort(distances.begin(), distances.end());
    distances.erase(std::unique(distances.begin(), distances.end()), distances.end());
    std::sort(rates.begin(), rates.end());
    rates.erase(std::unique(rates.begin(), rates.end()), rates.end());
    std::vector<Job> jobs;
    for (int d : distances) {
        for (double p : rates) {
            for (int t = 0; t < spec.trials; t++) {
                for (auto m : spec.methods) {
                    jobs.push_back({d, p, t, m});
                }
            }
        }
    }
    return jobs;
}

DecoderParams params_for(const ExperimentSpec &spec, DecodeMethod method, std::uint64_t seed) {
    DecoderParams params = spec.params;
    if (method == DecodeMethod::sa) {
        params.anneal = spec.sa_anneal;
    }
    params.anneal.mode = method == DecodeMethod::sa ? AnnealMode::sa : AnnealMode::da_replica_exchange;
    params.anneal.seed = derive_seed(seed, {static_cast<std::uint64_t>(method)});
    // Parallelism lives at the trial level.
    params.anneal.workers = 1;
    return params;
}

struct TrialData {
    ResultRecord record;
    ErrorPattern actual;
    Syndrome syndrome;
    DecodeOutcome outcome;
};

TrialData run_one(const ExperimentSpec &spec, const CodeLattice &lat, const Job &job) {
    TrialData out;
    auto &r = out.record;
    r.d = job.d;
    r.n_data = lat.num_data();
    r.p = job.p;
    r.method = job.method;
    r.trial = job.trial;
    r.seed = trial_seed(spec.seed, job.d, job.p, job.trial);
    std::mt19937_64 rng(r.seed);
    out.actual = sample_errors(lat, job.p, rng);
    out.syndrome = extract_syndrome(lat, out.actual);
    out.outcome = decode(lat, out.syndrome, job.method, params_for(spec, job.method, r.seed), &out.actual);
    r.syndrome_satisfied = out.outcome.syndrome_satisfied;
    r.logical_error = out.outcome.logical_error;
    r.ground_state_proxy = out.outcome.ground_state_proxy;
    r.iterations = out.outcome.iterations;
    r.energy = out.outcome.energy;
    r.estimate_weight = out.outcome.estimate.weight();
    r.actual_weight = out.actual.weight();
    if (lat.num_data() <= 16) {
        r.exact_ground = r.syndrome_satisfied && r.estimate_weight == ground_state_oracle(lat, out.syndrome) ? 1 : 0;
    }
    return out;
}

// Runs body(i) for every job index on the requested number of threads and
// rethrows the first failure afterwards.
template <typename Body>
void parallel_jobs(std::size_t count, int workers, Body &&body) {
    std::exception_ptr failure;
    std::mutex failure_mutex;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
    for (std::size_t i = 0; i < count; i++) {
        try {
            body(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

std::map<int, CodeLattice> lattices_for(const std::vector<Job> &jobs) {
    std::map<int, CodeLattice> out;
    for (const auto &j : jobs) {
        if (!out.count(j.d)) {
            out.emplace(j.d, build_lattice(j.d));
        }
    }
    return out;
}

double mean(double sum, int n) {
    return n > 0 ? sum / n : 0.0;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, int d, double p, int trial) {
    const auto p_key = static_cast<std::uint64_t>(std::llround(p * 1e9));
    return derive_seed(master, {static_cast<std::uint64_t>(d), p_key, static_cast<std::uint64_t>(trial)});
}

std::vector<ResultRecord> run_trials(const ExperimentSpec &spec) {
    spec.validate();
    const auto jobs = enumerate_jobs(spec);
    const auto lattices = lattices_for(jobs);
    std::vector<ResultRecord> records(jobs.size());
    parallel_jobs(jobs.size(), spec.workers, [&](std::size_t i) {
        records[i] = run_one(spec, lattices.at(jobs[i].d), jobs[i]).record;
    });
    return records;
}

void write_csv(std::ostream &out, const std::vector<ResultRecord> &records) {
    out << kCsvHeader << "\n";
    for (const auto &r : records) {
        out << r.d << ',' << r.n_data << ',' << format_double(r.p) << ',' << to_string(r.method) << ',' << r.trial
            << ',' << r.seed << ',' << int(r.syndrome_satisfied) << ',' << int(r.logical_error) << ','
            << int(r.ground_state_proxy) << ',' << r.iterations << ',' << r.energy << "\n";
    }
    if (!out) {
        throw std::runtime_error("write_csv: stream error");
    }
}

std::vector<ResultRecord> read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::runtime_error("read_csv: unexpected header");
    }
    std::vector<ResultRecord> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) {
            f.push_back(item);
        }
        if (f.size() != 11) {
            throw std::runtime_error("read_csv: line " + std::to_string(lineno) + " has " + std::to_string(f.size()) +
                                     " fields");
        }
        try {
            ResultRecord r;
            r.d = std::stoi(f[0]);
            r.n_data = std::stoull(f[1]);
            r.p = std::stod(f[2]);
            r.method = parse_decode_method(f[3]);
            r.trial = std::stoi(f[4]);
            r.seed = std::stoull(f[5]);
            r.syndrome_satisfied = f[6] == "1";
            r.logical_error = f[7] == "1";
            r.ground_state_proxy = f[8] == "1";
            r.iterations = std::stoll(f[9]);
            r.energy = std::stoll(f[10]);
            out.push_back(r);
        } catch (const std::exception &e) {
            throw std::runtime_error("read_csv: line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

LogLogFit fit_loglog_exponent(const std::vector<std::pair<double, double>> &points) {
    if (points.size() < 3) {
        throw std::domain_error("fit_loglog_exponent needs at least 3 points");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [n, y] : points) {
        if (!(n > 0.0) || !(y > 0.0)) {
            throw std::domain_error("fit_loglog_exponent needs positive values");
        }
        const double lx = std::log(n), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double k = static_cast<double>(points.size());
    const double den = k * sxx - sx * sx;
    if (!(std::abs(den) > 1e-12 * k * sxx)) {
        throw std::domain_error("fit_loglog_exponent needs distinct N values");
    }
    LogLogFit fit;
    fit.exponent = (k * sxy - sx * sy) / den;
    fit.intercept = (sy - fit.exponent * sx) / k;
    return fit;
}

ScalingReport summarize_scaling(std::vector<ResultRecord> records) {
    ScalingReport rep;
    struct Acc {
        std::size_t n_data = 0;
        int trials = 0;
        double iters = 0;
        int satisfied = 0;
    };
    std::map<std::tuple<int, double, int>, Acc> cells;
    for (const auto &r : records) {
        auto &a = cells[{static_cast<int>(r.method), r.p, r.d}];
        a.n_data = r.n_data;
        a.trials++;
        a.iters += static_cast<double>(r.iterations);
        a.satisfied += r.syndrome_satisfied;
    }
    std::map<std::pair<int, double>, std::vector<std::pair<double, double>>> series;
    for (const auto &[key, a] : cells) {
        auto [m, p, d] = key;
        ScalingPoint pt{static_cast<DecodeMethod>(m), p, d, a.n_data, a.trials, mean(a.iters, a.trials),
                        mean(a.satisfied, a.trials)};
        rep.points.push_back(pt);
        series[{m, p}].emplace_back(static_cast<double>(a.n_data), pt.mean_iterations);
    }
    for (const auto &[key, pts] : series) {
        ScalingFit f;
        f.method = static_cast<DecodeMethod>(key.first);
        f.p = key.second;
        std::vector<std::pair<double, double>> positive;
        for (auto pt : pts) {
            if (pt.second > 0) {
                positive.push_back(pt);
            }
        }
        if (positive.size() < pts.size()) {
            f.note = std::to_string(pts.size() - positive.size()) + " zero-mean point(s) dropped";
        }
        try {
            f.fit = fit_loglog_exponent(positive);
            f.ok = true;
        } catch (const std::domain_error &e) {
            f.note = e.what();
        }
        rep.fits.push_back(f);
    }
    rep.records = std::move(records);
    return rep;
}

ScalingReport run_scaling(const ExperimentSpec &spec) {
    return summarize_scaling(run_trials(spec));
}

double binomial_stderr(int successes, int trials) {
    if (trials <= 0) {
        return 0.0;
    }
    const double p = static_cast<double>(successes) / trials;
    return std::sqrt(p * (1.0 - p) / trials);
}

ThresholdBracket bracket_crossing(const std::vector<RateCell> &cells, DecodeMethod method, int d_small, int d_large) {
    std::map<double, double> small, large;
    for (const auto &c : cells) {
        if (c.method != method) {
            continue;
        }
        if (c.d == d_small) {
            small[c.p] = c.rate;
        } else if (c.d == d_large) {
            large[c.p] = c.rate;
        }
    }
    std::vector<std::pair<double, double>> diff;
    for (const auto &[p, r] : small) {
        if (auto it = large.find(p); it != large.end()) {
            diff.emplace_back(p, it->second - r);
        }
    }
    ThresholdBracket b{method, d_small, d_large};
    if (diff.empty()) {
        return b;
    }
    // First index from which the larger code stays strictly worse.
    std::size_t u = diff.size();
    while (u > 0 && diff[u - 1].second > 0) {
        u--;
    }
    if (u == diff.size()) {
        b.lower = diff.back().first;
        return b;
    }
    if (u == 0) {
        b.upper = diff.front().first;
        return b;
    }
    b.found = true;
    b.lower = diff[u - 1].first;
    b.upper = diff[u].first;
    return b;
}

ThresholdReport summarize_threshold(std::vector<ResultRecord> records) {
    ThresholdReport rep;
    std::map<std::tuple<int, int, double>, std::pair<int, int>> acc;
    std::map<int, std::vector<int>> distances;
    for (const auto &r : records) {
        auto &a = acc[{static_cast<int>(r.method), r.d, r.p}];
        a.first++;
        a.second += r.logical_error;
    }
    for (const auto &[key, a] : acc) {
        auto [m, d, p] = key;
        const double rate = static_cast<double>(a.second) / a.first;
        rep.cells.push_back({static_cast<DecodeMethod>(m), d, p, a.first, a.second, rate, binomial_stderr(a.second, a.first)});
        auto &ds = distances[m];
        if (ds.empty() || ds.back() != d) {
            ds.push_back(d);
        }
    }
    for (const auto &[m, ds] : distances) {
        if (ds.size() < 2) {
            continue;
        }
        const auto method = static_cast<DecodeMethod>(m);
        rep.brackets.push_back(bracket_crossing(rep.cells, method, ds.front(), ds.back()));
        for (std::size_t i = 0; ds.size() > 2 && i + 1 < ds.size(); i++) {
            rep.brackets.push_back(bracket_crossing(rep.cells, method, ds[i], ds[i + 1]));
        }
    }
    rep.records = std::move(records);
    return rep;
}

ThresholdReport run_threshold(const ExperimentSpec &spec) {
    return summarize_threshold(run_trials(spec));
}

PowerLawFit fit_power_law(const std::vector<RateCell> &cells, double p_th, double p_low, double p_high) {
    if (!(p_th > 0.0)) {
        throw std::domain_error("fit_power_law needs p_th > 0");
    }
    const double eps = 1e-12;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t k = 0;
    for (const auto &c : cells) {
        if (c.p < p_low - eps || c.p > p_high + eps || !(c.rate > 0.0) || !(c.p > 0.0)) {
            continue;
        }
        const double x = effective_distance(c.d) * std::log(c.p / p_th);
        const double y = std::log(c.rate);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        k++;
    }
    if (k < 2) {
        throw std::domain_error("fit_power_law: fewer than two usable points in the fit window");
    }
    const double kk = static_cast<double>(k);
    const double den = kk * sxx - sx * sx;
    if (!(std::abs(den) > 1e-15)) {
        throw std::domain_error("fit_power_law: points in the window share one abscissa");
    }
    PowerLawFit fit;
    fit.c2 = (kk * sxy - sx * sy) / den;
    fit.c1 = std::exp((sy - fit.c2 * sx) / kk);
    fit.points_used = k;
    return fit;
}

GroundStatsReport summarize_ground_stats(std::vector<ResultRecord> records) {
    GroundStatsReport rep;
    struct Acc {
        int trials = 0, proxy = 0, exact = 0, exact_known = 0;
        double iter_ground = 0, iter_excited = 0;
    };
    std::map<std::tuple<int, int, double>, Acc> acc;
    for (const auto &r : records) {
        auto &a = acc[{static_cast<int>(r.method), r.d, r.p}];
        a.trials++;
        if (r.ground_state_proxy) {
            a.proxy++;
            a.iter_ground += static_cast<double>(r.iterations);
        } else {
            a.iter_excited += static_cast<double>(r.iterations);
        }
        if (r.exact_ground >= 0) {
            a.exact_known++;
            a.exact += r.exact_ground;
        }
    }
    for (const auto &[key, a] : acc) {
        auto [m, d, p] = key;
        GroundStatsCell c{};
        c.method = static_cast<DecodeMethod>(m);
        c.d = d;
        c.p = p;
        c.trials = a.trials;
        c.proxy_fraction = static_cast<double>(a.proxy) / a.trials;
        c.proxy_stderr = binomial_stderr(a.proxy, a.trials);
        c.exact_fraction = a.exact_known == a.trials ? static_cast<double>(a.exact) / a.trials : -1.0;
        c.ground_count = a.proxy;
        c.excited_count = a.trials - a.proxy;
        c.mean_iterations_ground = mean(a.iter_ground, c.ground_count);
        c.mean_iterations_excited = mean(a.iter_excited, c.excited_count);
        rep.cells.push_back(c);
    }
    rep.records = std::move(records);
    return rep;
}

GroundStatsReport run_ground_state_stats(const ExperimentSpec &spec) {
    return summarize_ground_stats(run_trials(spec));
}

std::vector<DemoResult> run_demo(const ExperimentSpec &spec) {
    spec.validate();
    const auto jobs = enumerate_jobs(spec);
    const auto lattices = lattices_for(jobs);
    std::vector<DemoResult> out(jobs.size());
    parallel_jobs(jobs.size(), spec.workers, [&](std::size_t i) {
        const auto &lat = lattices.at(jobs[i].d);
        auto t = run_one(spec, lat, jobs[i]);
        auto &res = out[i];
        res.record = t.record;
        res.actual = std::move(t.actual);
        res.estimate = std::move(t.outcome.estimate);
        res.syndrome = std::move(t.syndrome);
        res.residual = t.outcome.residual;
        auto ising = build_ising(lat, res.syndrome, spec.params.J, spec.params.h);
        res.actual_energy = ising.energy_of_errors(res.actual);
        res.mwpm_energy = ising.energy_of_errors(mwpm_decode(build_defect_graph(lat, res.syndrome)).correction);
    });
    return out;
}

}  // namespace surfqubo
