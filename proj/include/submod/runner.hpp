#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "submod/baselines.hpp"
#include "submod/bidirectional.hpp"
#include "submod/oracle.hpp"
#include "submod/smooth_histogram.hpp"
#include "submod/stream_io.hpp"
#include "submod/threshold_stream.hpp"
#include "submod/window.hpp"

namespace submod {

enum class Algorithm { Smooth, Bidir, Threshold, Greedy, Random };

struct RunConfig {
    Algorithm algorithm = Algorithm::Smooth;
    FuncKind function = FuncKind::Coverage;
    WindowSpec window;
    double kernel_bandwidth = 0.75;
    std::string input_path;                      // exactly one of input_path /
    std::optional<SyntheticSpec> synthetic;      // synthetic must be set
    std::uint64_t seed = 1;
    std::uint64_t report_every = 1;
    std::uint32_t trials = 1000;                 // random baseline only
    bool coverage_prune = false;

    void validate() const {
        window.validate();
        if (input_path.empty() == !synthetic.has_value())
            throw std::invalid_argument("exactly one of input path / synthetic spec required");
        if (report_every < 1) throw std::invalid_argument("report-every must be >= 1");
        if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    }
};

struct RunOutput {
    std::vector<StepReport> reports;
    std::uint64_t filtered = 0;  // zero-value elements dropped before the algorithm
    std::uint64_t evals_total = 0;
    StreamStats stats;
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t t) {
    std::uint64_t x = seed ^ (t * 0x9E3779B97F4A7C15ull);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

}  // namespace detail

inline std::vector<Element> load_stream(const RunConfig& cfg) {
    if (cfg.synthetic) return gen_synthetic(*cfg.synthetic, cfg.seed);
    return cfg.function == FuncKind::Coverage ? load_coverage_stream(cfg.input_path)
                                              : load_vector_stream(cfg.input_path);
}

// Feeds the stream to the configured algorithm one element per arrival
// position. Zero-value elements are dropped before any algorithm sees them,
// but still advance the position so window arithmetic matches arrivals. The
// driver alone materializes the raw window needed by the greedy and random
// baselines; streaming algorithms never receive it.
inline RunOutput run_stream(const RunConfig& cfg) {
    cfg.validate();
    const std::vector<Element> stream = load_stream(cfg);
    SubmodularOracle oracle(cfg.function, cfg.kernel_bandwidth);

    std::optional<SmoothHistogram> smooth;
    std::optional<Bidirectional> bidir;
    std::optional<ThresholdStream> threshold;
    if (cfg.algorithm == Algorithm::Smooth)
        smooth.emplace(cfg.window, cfg.coverage_prune);
    else if (cfg.algorithm == Algorithm::Bidir)
        bidir.emplace(cfg.window, cfg.coverage_prune);

    const bool windowed_baseline =
        cfg.algorithm == Algorithm::Greedy || cfg.algorithm == Algorithm::Random;
    std::deque<Element> window;

    RunOutput out;
    const std::uint64_t n = stream.size();
    for (const Element& e : stream) {
        const std::uint64_t t = e.index;
        const std::uint64_t evals_before = oracle.eval_count();
        const double single = oracle.singleton(e);
        const bool survives = single > 0.0;
        if (survives) out.stats.observe(single);
        else ++out.filtered;

        switch (cfg.algorithm) {
            case Algorithm::Smooth:
                survives ? smooth->process(e, oracle) : smooth->skip(t);
                break;
            case Algorithm::Bidir:
                survives ? bidir->process(e, oracle) : bidir->skip(t, oracle);
                break;
            case Algorithm::Threshold:
                if (survives) {
                    if (threshold)
                        threshold->process(e, single, oracle);
                    else
                        threshold.emplace(cfg.window.k, cfg.window.epsilon, e, single, oracle,
                                          cfg.coverage_prune);
                }
                break;
            case Algorithm::Greedy:
            case Algorithm::Random:
                break;
        }
        if (windowed_baseline) {
            if (survives) window.push_back(e);
            const std::uint64_t start = t >= cfg.window.window ? t - cfg.window.window + 1 : 1;
            while (!window.empty() && window.front().index < start) window.pop_front();
        }

        if (t % cfg.report_every == 0 || t == n) {
            StepReport r;
            r.t = t;
            switch (cfg.algorithm) {
                case Algorithm::Smooth: {
                    const auto [set, value] = smooth->solution();
                    r.value = value;
                    r.solution = set->indices();
                    r.stored_items = smooth->stored_items();
                    r.num_indices = smooth->num_indices();
                    break;
                }
                case Algorithm::Bidir: {
                    const Bidirectional::Selection sel = bidir->solution();
                    r.value = sel.value;
                    r.solution = sel.set->indices();
                    r.stored_items = bidir->stored_items();
                    break;
                }
                case Algorithm::Threshold:
                    if (threshold) {
                        const ThresholdBucket& b = threshold->best();
                        r.value = b.solution.value;
                        r.solution = b.solution.indices();
                        r.stored_items = threshold->stored_items();
                    }
                    break;
                case Algorithm::Greedy: {
                    const std::vector<Element> ground(window.begin(), window.end());
                    const OracleResult g = offline_greedy(ground, cfg.window.k, oracle);
                    r.value = g.value;
                    r.solution = g.solution.indices();
                    r.stored_items = g.solution.size();
                    break;
                }
                case Algorithm::Random: {
                    const std::vector<Element> ground(window.begin(), window.end());
                    const RandomKResult rk = random_k(ground, cfg.window.k, cfg.trials,
                                                      detail::mix_seed(cfg.seed, t), oracle);
                    r.value = rk.mean_value;
                    r.solution = rk.last_sample.indices();
                    r.stored_items = rk.last_sample.size();
                    break;
                }
            }
            r.evals_step = oracle.eval_count() - evals_before;
            r.evals_cum = oracle.eval_count();
            out.reports.push_back(std::move(r));
        }
    }
    out.evals_total = oracle.eval_count();
    return out;
}

}  // namespace submod
