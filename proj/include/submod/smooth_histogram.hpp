#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "submod/element.hpp"
#include "submod/oracle.hpp"
#include "submod/threshold_stream.hpp"
#include "submod/window.hpp"

namespace submod {

struct RemovalRecord {
    std::uint64_t t = 0;
    std::uint64_t removed_x = 0;
    bool by_expiry = false;
    // For compaction removals: the pair that became adjacent and the values
    // certifying h(right) >= (1 - beta) * h(left) at removal time.
    std::uint64_t left_x = 0;
    std::uint64_t right_x = 0;
    double left_value = 0.0;
    double right_value = 0.0;
};

// Sliding-window maximizer built from start indices x_1 < ... < x_s, each
// running its own ThresholdStream over the suffix beginning at x_i. Indices
// are compacted so that skipping one costs at most a (1 - beta) factor in
// value, which keeps s logarithmic in k times the singleton spread.
// beta = delta = epsilon / 2.
class SmoothHistogram {
  public:
    explicit SmoothHistogram(const WindowSpec& spec, bool coverage_prune = false)
        : spec_(spec),
          beta_(spec.epsilon / 2.0),
          delta_(spec.epsilon / 2.0),
          prune_(coverage_prune) {
        spec_.validate();
    }

    // Per arriving element, in order: append a fresh index at x_s = t, prune
    // indices whose successor expired, feed the element to every instance,
    // then compact. Compaction scans from the smallest index and restarts
    // after each removal.
    void process(const Element& v, SubmodularOracle& f) {
        if (v.index <= t_)
            throw std::invalid_argument("SmoothHistogram: elements must arrive in index order");
        t_ = v.index;
        if (first_index_ == 0) first_index_ = v.index;
        entries_.push_back(Entry{t_, std::nullopt});
        prune_expired();
        const double s = f.singleton(v);
        for (Entry& e : entries_) {
            if (e.instance)
                e.instance->process(v, s, f);
            else
                e.instance.emplace(spec_.k, delta_, v, s, f, prune_);
        }
        compact();
    }

    // Position advance for an element filtered upstream: the window boundary
    // still moves, so expired indices must still be pruned.
    void skip(std::uint64_t t) {
        if (t <= t_) throw std::invalid_argument("SmoothHistogram: time must advance");
        t_ = t;
        prune_expired();
    }

    // Current solution: the first index when its instance covers every
    // surviving window element (x_1 at the window start, or x_1 past the
    // start only because nothing survived before it), otherwise the second.
    std::pair<const SolutionSet*, double> solution() const {
        if (t_ == 0) throw std::logic_error("SmoothHistogram: no elements processed");
        static const SolutionSet kEmpty{};
        if (entries_.empty()) return {&kEmpty, 0.0};
        const std::uint64_t start = window_start();
        if (entries_.front().x >= start) {
            assert(entries_.front().x == start || entries_.front().x == first_index_);
            return value_of(entries_.front());
        }
        if (entries_.size() >= 2) return value_of(entries_[1]);
        return {&kEmpty, 0.0};  // lone expired index after a filtered tail
    }

    std::size_t num_indices() const { return entries_.size(); }

    std::size_t stored_items() const {
        std::size_t n = 0;
        for (const Entry& e : entries_)
            if (e.instance) n += e.instance->stored_items();
        return n;
    }

    std::uint64_t time() const { return t_; }
    double beta() const { return beta_; }
    double delta() const { return delta_; }
    const WindowSpec& spec() const { return spec_; }

    struct EntryView {
        std::uint64_t x = 0;
        double value = 0.0;
    };

    std::vector<EntryView> entries() const {
        std::vector<EntryView> out;
        out.reserve(entries_.size());
        for (const Entry& e : entries_)
            out.push_back(EntryView{e.x, e.instance ? e.instance->best_value() : 0.0});
        return out;
    }

    void set_audit(bool on) { audit_ = on; }
    const std::vector<RemovalRecord>& removals() const { return removals_; }

  private:
    struct Entry {
        std::uint64_t x = 0;
        std::optional<ThresholdStream> instance;
    };

    std::uint64_t window_start() const {
        return t_ >= spec_.window ? t_ - spec_.window + 1 : 1;
    }

    std::pair<const SolutionSet*, double> value_of(const Entry& e) const {
        const ThresholdBucket& b = e.instance->best();
        return {&b.solution, b.solution.value};
    }

    // Remove the predecessor of any expired index; afterwards at most one
    // expired index remains and it is x_1. Expired indices form a prefix, so
    // only head removals can occur.
    void prune_expired() {
        const std::uint64_t start = window_start();
        while (entries_.size() >= 2 && entries_[1].x < start) {
            if (audit_) {
                RemovalRecord r;
                r.t = t_;
                r.removed_x = entries_.front().x;
                r.by_expiry = true;
                r.right_x = entries_[1].x;
                removals_.push_back(r);
            }
            entries_.erase(entries_.begin());
        }
    }

    void compact() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 2 < entries_.size(); ++i) {
                const double hi = entries_[i].instance->best_value();
                const double lo = entries_[i + 2].instance->best_value();
                if (lo >= (1.0 - beta_) * hi) {
                    if (audit_) {
                        RemovalRecord r;
                        r.t = t_;
                        r.removed_x = entries_[i + 1].x;
                        r.left_x = entries_[i].x;
                        r.right_x = entries_[i + 2].x;
                        r.left_value = hi;
                        r.right_value = lo;
                        removals_.push_back(r);
                    }
                    entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                    changed = true;
                    break;
                }
            }
        }
    }

    WindowSpec spec_;
    double beta_;
    double delta_;
    bool prune_;
    std::uint64_t t_ = 0;
    std::uint64_t first_index_ = 0;
    std::vector<Entry> entries_;
    bool audit_ = false;
    std::vector<RemovalRecord> removals_;
};

}  // namespace submod
