#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace submod {

// Count-based sliding window parameters shared by all algorithms.
// `sub_window` (W') applies to the bidirectional algorithm only; zero means
// "same as window".
struct WindowSpec {
    std::uint64_t window = 0;      // W
    std::uint32_t k = 0;           // cardinality bound
    double epsilon = 0.0;
    std::uint64_t sub_window = 0;  // W'

    std::uint64_t effective_sub_window() const { return sub_window == 0 ? window : sub_window; }

    void validate() const {
        if (window < 1) throw std::invalid_argument("window size must be >= 1");
        if (k < 1) throw std::invalid_argument("k must be >= 1");
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw std::invalid_argument("epsilon must be in (0, 1)");
        if (effective_sub_window() < 1 || effective_sub_window() > window)
            throw std::invalid_argument("sub-window must satisfy 1 <= W' <= W");
    }
};

struct ActiveWindow {
    std::uint64_t start = 1;
    std::uint64_t end = 1;
    std::uint64_t length() const { return end - start + 1; }
};

inline ActiveWindow active_window(std::uint64_t t, std::uint64_t window) {
    if (t < 1) throw std::invalid_argument("time must be >= 1");
    return ActiveWindow{t >= window ? t - window + 1 : 1, t};
}

inline ActiveWindow active_window(std::uint64_t t, const WindowSpec& spec) {
    return active_window(t, spec.window);
}

// One benchmark record. `stored_items` counts members across all live
// candidate sets with repetitions; `num_indices` is the histogram index count
// (zero for the other algorithms).
struct StepReport {
    std::uint64_t t = 0;
    double value = 0.0;
    std::vector<std::uint64_t> solution;
    std::uint64_t evals_step = 0;
    std::uint64_t evals_cum = 0;
    std::uint64_t stored_items = 0;
    std::uint64_t num_indices = 0;
};

}  // namespace submod
