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

#ifndef SURFQUBO_RNG_HPP
#define SURFQUBO_RNG_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace surfqubo {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic child seed from a parent seed and a list of stream tags.
inline std::uint64_t derive_seed(std::uint64_t parent, std::initializer_list<std::uint64_t> tags) {
    std::uint64_t s = splitmix64(parent);
    for (auto t : tags) {
        s = splitmix64(s ^ splitmix64(t + 0x632BE59BD9B4E019ULL));
    }
    return s;
}

/// Uniform double in (0, 1); never returns 0 so log() is safe.
inline double uniform_open(std::mt19937_64 &rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Uniform integer in [0, n) by multiply-shift. Bias is below 2^-64 * n.
inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

/// Binomial(n, p) by skipping over geometric gaps between successes.
/// log_q must equal log(1 - p). Cost is linear in the returned count.
inline std::uint64_t binomial_by_gaps(std::mt19937_64 &rng, std::uint64_t n, double log_q) {
    std::uint64_t count = 0;
    double pos = -1.0;
    const double limit = static_cast<double>(n);
    while (true) {
        pos += 1.0 + std::floor(std::log(uniform_open(rng)) / log_q);
        if (pos >= limit) {
            return count;
        }
        count++;
    }
}

/// Binomial(n, p). Small expected counts use gap skipping; large ones
/// defer to std::binomial_distribution. log_q is log(1 - p).
inline std::uint64_t sample_binomial(std::mt19937_64 &rng, std::uint64_t n, double p, double log_q) {
    if (n == 0 || p <= 0.0) {
        return 0;
    }
    if (p >= 1.0) {
        return n;
    }
    const double mean = static_cast<double>(n) * std::min(p, 1.0 - p);
    if (mean > 16.0) {
        std::binomial_distribution<std::uint64_t> dist(n, p);
        return dist(rng);
    }
    if (p > 0.5) {
        return n - binomial_by_gaps(rng, n, std::log(p));
    }
    return binomial_by_gaps(rng, n, log_q);
}

inline std::uint64_t sample_binomial(std::mt19937_64 &rng, std::uint64_t n, double p) {
    return sample_binomial(rng, n, p, std::log1p(-p));
}

}  // namespace surfqubo

#endif  // SURFQUBO_RNG_HPP
