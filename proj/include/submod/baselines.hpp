#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "submod/element.hpp"
#include "submod/oracle.hpp"

namespace submod {

struct OracleResult {
    SolutionSet solution;
    double value = 0.0;
    bool exhausted = true;
};

// Batch greedy: k rounds, each adding the element of maximum marginal gain;
// ties break toward the smallest arrival index, rounds stop when no element
// has positive gain.
inline OracleResult offline_greedy(std::span<const Element> ground, std::uint32_t k,
                                   SubmodularOracle& f) {
    OracleResult out;
    for (std::uint32_t round = 0; round < k; ++round) {
        double best_gain = 0.0;
        const Element* best = nullptr;
        for (const Element& e : ground) {
            if (out.solution.contains(e.index)) continue;
            const double gain = f.value_with(out.solution.members, e) - out.solution.value;
            if (best == nullptr || gain > best_gain ||
                (gain == best_gain && e.index < best->index)) {
                best_gain = gain;
                best = &e;
            }
        }
        if (best == nullptr || best_gain <= 0.0) break;
        out.solution.add(*best, out.solution.value + best_gain);
    }
    out.value = out.solution.value;
    return out;
}

namespace detail {

// Unbiased bounded draw from raw 64-bit output; avoids the
// implementation-defined behavior of std::uniform_int_distribution so that
// seeded runs are reproducible across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

struct RandomKResult {
    double mean_value = 0.0;
    SolutionSet last_sample;
};

// Mean objective of uniform without-replacement samples of min(k, n) elements.
inline RandomKResult random_k(std::span<const Element> ground, std::uint32_t k,
                              std::uint32_t trials, std::uint64_t seed, SubmodularOracle& f) {
    if (trials < 1) throw std::invalid_argument("random_k: trials must be >= 1");
    RandomKResult out;
    if (ground.empty()) return out;

    const std::size_t m = std::min<std::size_t>(k, ground.size());
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> pool(ground.size());
    double total = 0.0;
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
        for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
        SolutionSet sample;
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t pick =
                j + static_cast<std::size_t>(detail::uniform_below(rng, pool.size() - j));
            std::swap(pool[j], pool[pick]);
            sample.members.push_back(ground[pool[j]]);
        }
        sample.value = f.value(sample.members);
        total += sample.value;
        if (trial + 1 == trials) out.last_sample = std::move(sample);
    }
    out.mean_value = total / trials;
    return out;
}

// Exact optimum by exhaustive enumeration of all min(k, n)-subsets; by
// monotonicity nothing larger needs to be considered. Refuses ground sets
// beyond `size_cap`.
inline OracleResult brute_force_opt(std::span<const Element> ground, std::uint32_t k,
                                    SubmodularOracle& f, std::size_t size_cap = 20) {
    if (ground.size() > size_cap)
        throw std::invalid_argument("brute_force_opt: ground set exceeds size cap");
    OracleResult out;
    if (ground.empty() || k == 0) return out;

    const std::size_t n = ground.size();
    const std::size_t m = std::min<std::size_t>(k, n);
    std::vector<std::size_t> comb(m);
    for (std::size_t i = 0; i < m; ++i) comb[i] = i;

    SolutionSet candidate;
    bool more = true;
    while (more) {
        candidate.members.clear();
        for (std::size_t i : comb) candidate.members.push_back(ground[i]);
        candidate.value = f.value(candidate.members);
        if (candidate.value > out.value) {
            out.value = candidate.value;
            out.solution = candidate;
        }
        // next combination
        more = false;
        for (std::size_t pos = m; pos-- > 0;) {
            if (comb[pos] + 1 <= n - (m - pos)) {
                ++comb[pos];
                for (std::size_t q = pos + 1; q < m; ++q) comb[q] = comb[q - 1] + 1;
                more = true;
                break;
            }
        }
    }
    return out;
}

}  // namespace submod
