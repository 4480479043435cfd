#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "submod/element.hpp"
#include "submod/oracle.hpp"
#include "submod/threshold_stream.hpp"
#include "submod/window.hpp"

namespace submod {

// One checkpoint set of a (sub-window, threshold) family. `anchor` is the
// earliest backward member's arrival index, or the sub-window end for the
// empty-backward checkpoint; the set is eligible for a query at time t iff
// anchor >= t - W + 1, since forward additions always lie inside the active
// window while the sub-window is active.
struct BidirCheckpoint {
    std::uint64_t anchor = 0;
    std::uint32_t backward_count = 0;
    SolutionSet set;
};

// Checkpoints for one threshold, ordered by descending anchor with the
// empty-backward checkpoint first. At most k+1 entries.
struct BidirFamily {
    double tau = 0.0;
    std::vector<BidirCheckpoint> checkpoints;
};

// All families of one completed sub-window, plus the lazy threshold-grid
// bookkeeping anchored at the sub-window's last surviving element. A
// sub-window whose elements were all filtered has no anchor and stays empty.
struct SubWindowFamilies {
    std::uint64_t index = 0;  // i; the sub-window covers positions ((i-1)W', iW']
    double anchor_value = 0.0;
    double running_max = 0.0;
    std::vector<BidirFamily> families;  // tau ascending
    double next_tau = 0.0;
    int next_index = 0;
    double log_one_plus_delta = 0.0;
    std::uint32_t k = 0;

    int max_threshold_index() const {
        const double r =
            std::log(2.0 * k * running_max / anchor_value) / log_one_plus_delta;
        return static_cast<int>(std::floor(r + kThresholdLogGuard));
    }
};

// Sliding-window maximizer that partitions the stream into sub-windows of
// size W'. At each completed sub-window a backward threshold pass snapshots
// at most k+1 nested checkpoint sets per threshold; afterwards every
// checkpoint takes forward additions under the same threshold rule. Queries
// select, per threshold of the first active sub-window, the smallest-anchor
// checkpoint still inside the window. delta = epsilon.
//
// Every stream position must be consumed, through process() for surviving
// elements and skip() for filtered ones; boundary passes fire on positions.
class Bidirectional {
  public:
    explicit Bidirectional(const WindowSpec& spec, bool coverage_prune = false)
        : spec_(spec), delta_(spec.epsilon), prune_(coverage_prune) {
        spec_.validate();
        w_prime_ = spec_.effective_sub_window();
    }

    void process(const Element& v, SubmodularOracle& f) {
        if (v.index <= t_)
            throw std::invalid_argument("Bidirectional: elements must arrive in index order");
        fire_boundaries(t_, v.index - 1, f);  // boundaries strictly before v exclude it
        buffer_.push_back(v);
        fire_boundaries(v.index - 1, v.index, f);
        t_ = v.index;
        prune_inactive();
        forward_update(v, f);
    }

    // Position advance for an element filtered upstream. Sub-window
    // boundaries fire on positions, not on surviving elements, so a filtered
    // boundary still triggers the backward pass over the buffered survivors.
    void skip(std::uint64_t t, SubmodularOracle& f) {
        if (t <= t_) throw std::invalid_argument("Bidirectional: time must advance");
        fire_boundaries(t_, t, f);
        t_ = t;
        prune_inactive();
    }

    struct Selection {
        double value = 0.0;
        double tau = 0.0;
        std::uint64_t anchor = 0;
        const SolutionSet* set = nullptr;
    };

    Selection solution() const {
        if (t_ == 0) throw std::logic_error("Bidirectional: no elements processed");
        static const SolutionSet kEmpty{};
        const std::uint64_t it = first_active();
        if (it == 0) {
            if (!prefix_) return Selection{0.0, 0.0, 0, &kEmpty};
            const ThresholdBucket& b = prefix_->best();
            return Selection{b.solution.value, b.tau, 0, &b.solution};
        }
        const SubWindowFamilies* sw = find_sub_window(it);
        assert(sw != nullptr);
        const std::uint64_t start = window_start();
        Selection best{0.0, 0.0, 0, &kEmpty};
        bool have = false;
        for (const BidirFamily& fam : sw->families) {
            const BidirCheckpoint* pick = nullptr;
            // Smallest eligible anchor; on equal anchors the backward-seeded
            // snapshot is preferred over the empty-backward checkpoint.
            for (auto rit = fam.checkpoints.rbegin(); rit != fam.checkpoints.rend(); ++rit) {
                if (rit->anchor >= start) {
                    pick = &*rit;
                    break;
                }
            }
            assert(pick != nullptr);  // the boundary checkpoint is always eligible
            if (!pick) continue;
            if (!have || pick->set.value > best.value) {
                best = Selection{pick->set.value, fam.tau, pick->anchor, &pick->set};
                have = true;
            }
        }
        return best;
    }

    std::size_t stored_items() const {
        std::size_t n = buffer_.size();
        for (const SubWindowFamilies& sw : active_)
            for (const BidirFamily& fam : sw.families)
                for (const BidirCheckpoint& cp : fam.checkpoints) n += cp.set.size();
        if (prefix_) n += prefix_->stored_items();
        return n;
    }

    std::uint64_t time() const { return t_; }
    const WindowSpec& spec() const { return spec_; }
    double delta() const { return delta_; }
    std::uint64_t sub_window_size() const { return w_prime_; }
    const std::deque<SubWindowFamilies>& sub_windows() const { return active_; }
    const std::optional<ThresholdStream>& prefix_instance() const { return prefix_; }
    std::size_t buffer_size() const { return buffer_.size(); }

    // Backward pass over one completed sub-window. The threshold grid is
    // anchored at the last surviving element's singleton value and sized by
    // the sub-window's singleton maximum (both known from the buffer); an
    // entirely filtered sub-window installs no families.
    static SubWindowFamilies backward_pass(std::span<const Element> sub, std::uint64_t i,
                                           std::uint64_t w_prime, std::uint32_t k, double delta,
                                           SubmodularOracle& f, bool coverage_prune = false) {
        if (k < 1) throw std::invalid_argument("k must be >= 1");
        SubWindowFamilies sw;
        sw.index = i;
        sw.k = k;
        sw.log_one_plus_delta = std::log1p(delta);
        if (sub.empty()) return sw;

        double running_max = 0.0;
        double last_singleton = 0.0;
        for (const Element& e : sub) {
            last_singleton = f.singleton(e);
            if (last_singleton > running_max) running_max = last_singleton;
        }
        sw.anchor_value = last_singleton;
        sw.running_max = running_max;
        assert(sw.anchor_value > 0.0);

        const std::uint64_t boundary = i * w_prime;
        const bool exact = f.kind() == FuncKind::Coverage;
        const bool prune = coverage_prune && exact;
        const int m = sw.max_threshold_index();
        double tau = sw.anchor_value / (2.0 * k);
        for (int j = 0; j <= m; ++j, tau *= 1.0 + delta) {
            if (prune && tau < 1.0 && j > 0) continue;
            BidirFamily fam;
            fam.tau = tau;
            fam.checkpoints.push_back(BidirCheckpoint{boundary, 0, {}});
            SolutionSet backward;
            for (auto it = sub.rbegin(); it != sub.rend(); ++it) {
                if (backward.size() >= k) break;
                const double gain = f.value_with(backward.members, *it) - backward.value;
                const bool accept = exact ? gain >= tau : gain >= tau - kGainTolerance;
                if (accept) {
                    backward.add(*it, backward.value + gain);
                    fam.checkpoints.push_back(BidirCheckpoint{
                        it->index, static_cast<std::uint32_t>(backward.size()), backward});
                }
            }
            sw.families.push_back(std::move(fam));
        }
        sw.next_index = m + 1;
        sw.next_tau = tau;
        return sw;
    }

  private:
    std::uint64_t window_start() const {
        return t_ >= spec_.window ? t_ - spec_.window + 1 : 1;
    }

    // i_t = max(0, ceil((t - W + 1) / W')): the first sub-window whose
    // elements can still be inside the active window.
    std::uint64_t first_active() const {
        if (t_ < spec_.window) return 0;
        const std::uint64_t a = t_ - spec_.window + 1;
        return (a + w_prime_ - 1) / w_prime_;
    }

    const SubWindowFamilies* find_sub_window(std::uint64_t i) const {
        for (const SubWindowFamilies& sw : active_)
            if (sw.index == i) return &sw;
        return nullptr;
    }

    // Install families for every boundary position in (from_excl, upto].
    void fire_boundaries(std::uint64_t from_excl, std::uint64_t upto, SubmodularOracle& f) {
        for (std::uint64_t b = (from_excl / w_prime_ + 1) * w_prime_; b <= upto; b += w_prime_) {
            active_.push_back(
                backward_pass(buffer_, b / w_prime_, w_prime_, spec_.k, delta_, f, prune_));
            buffer_.clear();
        }
    }

    void prune_inactive() {
        const std::uint64_t it = first_active();
        while (!active_.empty() && active_.front().index < it) active_.pop_front();
        if (it >= 1) prefix_.reset();
    }

    void forward_update(const Element& v, SubmodularOracle& f) {
        const bool exact = f.kind() == FuncKind::Coverage;
        double singleton = -1.0;  // computed on first use, shared by all consumers
        if (first_active() == 0) {
            singleton = f.singleton(v);
            if (prefix_)
                prefix_->process(v, singleton, f);
            else
                prefix_.emplace(spec_.k, delta_, v, singleton, f, prune_);
        }
        // Only sub-windows completed strictly before t take forward updates;
        // one installed at t already contains v via the backward pass.
        const std::uint64_t last = (t_ + w_prime_ - 1) / w_prime_ - 1;
        for (SubWindowFamilies& sw : active_) {
            if (sw.index > last) continue;
            if (sw.anchor_value <= 0.0) continue;  // entirely filtered sub-window
            if (singleton < 0.0) singleton = f.singleton(v);
            if (singleton > sw.running_max) {
                sw.running_max = singleton;
                grow_families(sw, exact);
            }
            for (BidirFamily& fam : sw.families) {
                for (BidirCheckpoint& cp : fam.checkpoints) {
                    if (cp.set.size() >= spec_.k) continue;
                    const double gain = f.value_with(cp.set.members, v) - cp.set.value;
                    const bool accept = exact ? gain >= fam.tau : gain >= fam.tau - kGainTolerance;
                    if (accept) cp.set.add(v, cp.set.value + gain);
                }
            }
        }
    }

    // Thresholds added after the backward pass start from an empty-backward
    // checkpoint only: every sub-window element had a singleton value below
    // the new threshold, so none could have been accepted backward.
    void grow_families(SubWindowFamilies& sw, bool exact) {
        const int m = sw.max_threshold_index();
        const std::uint64_t boundary = sw.index * w_prime_;
        const bool prune = prune_ && exact;
        while (sw.next_index <= m) {
            const double tau = sw.next_tau;
            sw.next_tau *= 1.0 + delta_;
            ++sw.next_index;
            if (prune && tau < 1.0 && !sw.families.empty()) continue;
            BidirFamily fam;
            fam.tau = tau;
            fam.checkpoints.push_back(BidirCheckpoint{boundary, 0, {}});
            sw.families.push_back(std::move(fam));
        }
    }

    WindowSpec spec_;
    double delta_;
    bool prune_;
    std::uint64_t w_prime_ = 0;
    std::uint64_t t_ = 0;
    std::vector<Element> buffer_;
    std::deque<SubWindowFamilies> active_;
    std::optional<ThresholdStream> prefix_;
};

}  // namespace submod
