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

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "surfqubo/bench.hpp"

namespace surfqubo {

std::string to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::scaling:
            return "scaling";
        case ExperimentKind::threshold:
            return "threshold";
        case ExperimentKind::demo:
            return "demo";
        case ExperimentKind::ground_state_stats:
            return "ground-stats";
    }
    return "?";
}

ExperimentKind parse_experiment_kind(const std::string &text) {
    if (text == "scaling") {
        return ExperimentKind::scaling;
    }
    if (text == "threshold") {
        return ExperimentKind::threshold;
    }
    if (text == "demo") {
        return ExperimentKind::demo;
    }
    if (text == "ground-stats" || text == "ground_state_stats") {
        return ExperimentKind::ground_state_stats;
    }
    throw std::invalid_argument("unknown experiment kind: " + text);
}

ExperimentSpec default_spec(ExperimentKind kind) {
    ExperimentSpec s;
    s.kind = kind;
    s.params.J = 1024;
    s.params.h = 1;
    s.params.anneal.mode = AnnealMode::da_replica_exchange;
    s.params.anneal.replicas = 128;
    s.params.anneal.t_max = 5.0;
    s.params.anneal.t_min = 0.1;
    s.params.anneal.max_iterations = 1'000'000;
    s.params.anneal.stall_iterations = 2000;
    s.sa_anneal.mode = AnnealMode::sa;
    s.sa_anneal.t_max = 5.0;
    s.sa_anneal.t_min = 0.1;
    s.sa_anneal.max_iterations = 2'000'000;
    s.sa_anneal.stall_iterations = 0;
    switch (kind) {
        case ExperimentKind::scaling:
            s.distances = {4, 6, 8, 10, 12, 14, 16};
            s.error_rates = {0.001, 0.01, 0.02, 0.05, 0.10, 0.20};
            s.trials = 100;
            s.methods = {DecodeMethod::da, DecodeMethod::sa, DecodeMethod::mwpm};
            s.output = "scaling.csv";
            break;
        case ExperimentKind::threshold:
            s.distances = {5, 7, 9, 11};
            s.error_rates = {0.07, 0.08, 0.09, 0.095, 0.10, 0.11, 0.12};
            s.trials = 2000;
            s.methods = {DecodeMethod::da};
            s.output = "threshold.csv";
            break;
        case ExperimentKind::ground_state_stats:
            s.distances = {3, 5, 7, 9};
            s.error_rates = {0.01, 0.05, 0.10};
            s.trials = 100;
            s.methods = {DecodeMethod::da, DecodeMethod::mwpm};
            s.output = "ground_stats.csv";
            break;
        case ExperimentKind::demo:
            s.distances = {41};
            s.error_rates = {0.02};
            s.trials = 1;
            s.methods = {DecodeMethod::da};
            s.params.J = 4;
            s.params.anneal.t_max = 10.0;
            s.params.anneal.stall_iterations = 50'000;
            s.max_chain_length = 6;
            s.output = "demo.csv";
            break;
    }
    return s;
}

void ExperimentSpec::validate() const {
    if (distances.empty() || error_rates.empty() || methods.empty()) {
        throw std::invalid_argument("spec needs at least one distance, error rate and method");
    }
    for (int d : distances) {
        if (d < 2) {
            throw std::invalid_argument("distances must be >= 2");
        }
    }
    for (double p : error_rates) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("error rates must lie in [0, 1]");
        }
    }
    if (trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
    if (workers < 1) {
        throw std::invalid_argument("workers must be >= 1");
    }
    if (params.J <= 0 || params.h <= 0 || params.alpha < 0) {
        throw std::invalid_argument("J and h must be positive and alpha non-negative");
    }
    if (max_chain_length < 0) {
        throw std::invalid_argument("max_chain_length must be >= 0");
    }
    if (max_chain_length > 0 && 2 * params.J <= max_chain_length * params.h) {
        throw std::invalid_argument("J must exceed max_chain_length * h / 2");
    }
    params.anneal.validate();
    sa_anneal.validate();
    if (!(p_th > 0.0) || !(fit_p_low <= fit_p_high)) {
        throw std::invalid_argument("p_th must be positive and fit.p_low <= fit.p_high");
    }
}

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

template <typename T>
T parse_number(const std::string &text) {
    T value{};
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    return value;
}

double parse_rate(std::string text) {
    double scale = 1.0;
    if (!text.empty() && text.back() == '%') {
        text.pop_back();
        scale = 0.01;
    }
    return parse_number<double>(trim(text)) * scale;
}

std::vector<int> parse_distances(const std::string &value) {
    std::vector<int> out;
    for (const auto &item : split(value, ',')) {
        auto parts = split(item, ':');
        if (parts.size() == 1) {
            out.push_back(parse_number<int>(parts[0]));
        } else if (parts.size() == 2 || parts.size() == 3) {
            const int lo = parse_number<int>(parts[0]);
            const int hi = parse_number<int>(parts[1]);
            const int step = parts.size() == 3 ? parse_number<int>(parts[2]) : 1;
            if (step < 1 || hi < lo) {
                throw std::invalid_argument("bad distance range: " + item);
            }
            for (int d = lo; d <= hi; d += step) {
                out.push_back(d);
            }
        } else {
            throw std::invalid_argument("bad distance range: " + item);
        }
    }
    return out;
}

bool parse_bool(const std::string &v) {
    if (v == "1" || v == "true" || v == "yes") {
        return true;
    }
    if (v == "0" || v == "false" || v == "no") {
        return false;
    }
    throw std::invalid_argument("not a boolean: '" + v + "'");
}

void apply_key(ExperimentSpec &s, const std::string &key, const std::string &value, bool &saw_schema) {
    auto &da = s.params.anneal;
    auto &sa = s.sa_anneal;
    if (key == "schema_version") {
        if (parse_number<int>(value) != kSpecSchemaVersion) {
            throw std::invalid_argument("unsupported schema_version " + value);
        }
        saw_schema = true;
    } else if (key == "experiment") {
        if (parse_experiment_kind(value) != s.kind) {
            throw std::invalid_argument("config is for experiment '" + value + "' but verb is '" + to_string(s.kind) + "'");
        }
    } else if (key == "distances") {
        s.distances = parse_distances(value);
    } else if (key == "error_rates") {
        s.error_rates.clear();
        for (const auto &item : split(value, ',')) {
            s.error_rates.push_back(parse_rate(item));
        }
    } else if (key == "trials") {
        s.trials = parse_number<int>(value);
    } else if (key == "methods") {
        s.methods.clear();
        for (const auto &item : split(value, ',')) {
            s.methods.push_back(parse_decode_method(item));
        }
    } else if (key == "seed") {
        s.seed = parse_number<std::uint64_t>(value);
    } else if (key == "workers") {
        s.workers = parse_number<int>(value);
    } else if (key == "J") {
        s.params.J = parse_number<Energy>(value);
    } else if (key == "h") {
        s.params.h = parse_number<Energy>(value);
    } else if (key == "alpha") {
        s.params.alpha = parse_number<Energy>(value);
    } else if (key == "max_chain_length") {
        s.max_chain_length = parse_number<int>(value);
    } else if (key == "annealing_mode") {
        if (parse_anneal_mode(value) != AnnealMode::da_replica_exchange) {
            throw std::invalid_argument("annealing_mode configures the DA engine; use methods = sa for SA");
        }
    } else if (key == "replicas") {
        da.replicas = parse_number<int>(value);
    } else if (key == "t_max") {
        da.t_max = parse_number<double>(value);
    } else if (key == "t_min") {
        da.t_min = parse_number<double>(value);
    } else if (key == "max_iterations") {
        da.max_iterations = parse_number<std::int64_t>(value);
    } else if (key == "exchange_interval") {
        da.exchange_interval = parse_number<std::int64_t>(value);
    } else if (key == "offset_increment") {
        da.offset_increment = parse_number<Energy>(value);
    } else if (key == "stall_iterations") {
        da.stall_iterations = parse_number<std::int64_t>(value);
    } else if (key == "verify_energy") {
        da.verify_energy = sa.verify_energy = parse_bool(value);
    } else if (key == "sa.t_max") {
        sa.t_max = parse_number<double>(value);
    } else if (key == "sa.t_min") {
        sa.t_min = parse_number<double>(value);
    } else if (key == "sa.max_iterations") {
        sa.max_iterations = parse_number<std::int64_t>(value);
    } else if (key == "sa.stall_iterations") {
        sa.stall_iterations = parse_number<std::int64_t>(value);
    } else if (key == "output") {
        s.output = value;
    } else if (key == "plot") {
        s.plot = value;
    } else if (key == "p_th") {
        s.p_th = parse_rate(value);
    } else if (key == "fit.p_low") {
        s.fit_p_low = parse_rate(value);
    } else if (key == "fit.p_high") {
        s.fit_p_high = parse_rate(value);
    } else {
        throw std::invalid_argument("unknown key '" + key + "'");
    }
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

ExperimentSpec parse_spec(std::istream &in, ExperimentKind kind) {
    auto spec = default_spec(kind);
    bool saw_schema = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
        }
        try {
            apply_key(spec, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), saw_schema);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!saw_schema) {
        throw std::invalid_argument("config is missing schema_version");
    }
    spec.validate();
    return spec;
}

ExperimentSpec load_spec(const std::string &path, ExperimentKind kind) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    return parse_spec(in, kind);
}

void write_spec(std::ostream &out, const ExperimentSpec &s) {
    auto join_ints = [](const std::vector<int> &v) {
        std::string r;
        for (std::size_t i = 0; i < v.size(); i++) {
            r += (i ? "," : "") + std::to_string(v[i]);
        }
        return r;
    };
    std::string rates, methods;
    for (std::size_t i = 0; i < s.error_rates.size(); i++) {
        rates += (i ? "," : "") + format_double(s.error_rates[i]);
    }
    for (std::size_t i = 0; i < s.methods.size(); i++) {
        methods += (i ? "," : "") + to_string(s.methods[i]);
    }
    const auto &da = s.params.anneal;
    const auto &sa = s.sa_anneal;
    out << "schema_version = " << kSpecSchemaVersion << "\n"
        << "experiment = " << to_string(s.kind) << "\n"
        << "distances = " << join_ints(s.distances) << "\n"
        << "error_rates = " << rates << "\n"
        << "trials = " << s.trials << "\n"
        << "methods = " << methods << "\n"
        << "seed = " << s.seed << "\n"
        << "workers = " << s.workers << "\n"
        << "J = " << s.params.J << "\n"
        << "h = " << s.params.h << "\n"
        << "alpha = " << s.params.alpha << "  # 0 means 8J\n"
        << "max_chain_length = " << s.max_chain_length << "\n"
        << "annealing_mode = replica_exchange\n"
        << "replicas = " << da.replicas << "\n"
        << "t_max = " << format_double(da.t_max) << "\n"
        << "t_min = " << format_double(da.t_min) << "\n"
        << "max_iterations = " << da.max_iterations << "\n"
        << "exchange_interval = " << da.exchange_interval << "\n"
        << "offset_increment = " << da.offset_increment << "\n"
        << "stall_iterations = " << da.stall_iterations << "\n"
        << "verify_energy = " << (da.verify_energy ? "true" : "false") << "\n"
        << "sa.t_max = " << format_double(sa.t_max) << "\n"
        << "sa.t_min = " << format_double(sa.t_min) << "\n"
        << "sa.max_iterations = " << sa.max_iterations << "\n"
        << "sa.stall_iterations = " << sa.stall_iterations << "\n"
        << "output = " << s.output << "\n"
        << "plot = " << s.plot << "\n"
        << "p_th = " << format_double(s.p_th) << "\n"
        << "fit.p_low = " << format_double(s.fit_p_low) << "\n"
        << "fit.p_high = " << format_double(s.fit_p_high) << "\n";
}

}  // namespace surfqubo
