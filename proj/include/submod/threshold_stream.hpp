#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "submod/element.hpp"
#include "submod/oracle.hpp"

namespace submod {

// Guard against boundary round-off when mapping a running maximum to a
// threshold index: prefer including a threshold whose log lands within this
// distance of an integer.
inline constexpr double kThresholdLogGuard = 1e-12;

// Acceptance tolerance on gain >= tau. Disabled for coverage (integer gains
// compare exactly), enabled for log-det round-off.
inline constexpr double kGainTolerance = 1e-12;

struct InsertionRecord {
    std::uint64_t element_index = 0;
    double tau = 0.0;
    double gain = 0.0;
};

// One (tau, S_tau) pair: a candidate solution that accepts any element whose
// marginal gain is at least tau while the set has fewer than k members.
struct ThresholdBucket {
    double tau = 0.0;
    SolutionSet solution;
};

// Insertion-only streaming maximizer over one (sub-)stream. Maintains a
// geometric grid of thresholds anchored at the first element's singleton
// value, grown lazily as the running singleton maximum increases: new
// thresholds start with empty sets, which is sound because no prior element
// could have met them. The returned solution is the best bucket.
class ThresholdStream {
  public:
    ThresholdStream(std::uint32_t k, double delta, const Element& first, SubmodularOracle& f,
                    bool coverage_prune = false)
        : ThresholdStream(k, delta, first, f.singleton(first), f, coverage_prune) {}

    // Variant taking a pre-computed f({first}) so callers that already paid
    // for the singleton evaluation do not pay twice.
    ThresholdStream(std::uint32_t k, double delta, const Element& first, double first_singleton,
                    SubmodularOracle& f, bool coverage_prune = false)
        : k_(k),
          delta_(delta),
          log_one_plus_delta_(std::log1p(delta)),
          prune_sub_unit_(coverage_prune && f.kind() == FuncKind::Coverage) {
        if (k_ < 1) throw std::invalid_argument("k must be >= 1");
        if (!(delta_ > 0.0)) throw std::invalid_argument("delta must be positive");
        if (!(first_singleton > 0.0))
            throw std::invalid_argument("first element must have positive singleton value");

        first_value_ = first_singleton;
        running_max_ = first_singleton;
        start_index_ = first.index;
        last_index_ = 0;

        const double tau0 = first_value_ / (2.0 * k_);
        buckets_.push_back(ThresholdBucket{tau0, {}});
        next_tau_ = tau0 * (1.0 + delta_);
        next_index_ = 1;

        process(first, first_singleton, f);
    }

    void process(const Element& v, SubmodularOracle& f) { process(v, f.singleton(v), f); }

    void process(const Element& v, double singleton, SubmodularOracle& f) {
        if (v.index <= last_index_)
            throw std::invalid_argument("ThresholdStream: elements must arrive in index order");
        last_index_ = v.index;
        if (singleton > running_max_) running_max_ = singleton;
        grow();  // new thresholds are appended before v is offered to any bucket
        offer(v, f);
    }

    // Best bucket by cached value; ties resolve toward the smaller threshold.
    // Never evaluates the oracle.
    const ThresholdBucket& best() const {
        const ThresholdBucket* b = &buckets_.front();
        for (const ThresholdBucket& c : buckets_)
            if (c.solution.value > b->solution.value) b = &c;
        return *b;
    }

    double best_value() const { return best().solution.value; }

    // m_t = floor(log_{1+delta}(2k * runningMax / f(u1)))
    int max_threshold_index() const {
        const double r =
            std::log(2.0 * k_ * running_max_ / first_value_) / log_one_plus_delta_;
        return static_cast<int>(std::floor(r + kThresholdLogGuard));
    }

    std::size_t bucket_count() const { return buckets_.size(); }

    std::size_t stored_items() const {
        std::size_t n = 0;
        for (const ThresholdBucket& b : buckets_) n += b.solution.size();
        return n;
    }

    const std::vector<ThresholdBucket>& buckets() const { return buckets_; }
    std::uint32_t k() const { return k_; }
    double delta() const { return delta_; }
    double first_value() const { return first_value_; }
    double running_max() const { return running_max_; }
    std::uint64_t start_index() const { return start_index_; }
    std::uint64_t last_index() const { return last_index_; }

    void set_audit(bool on) { audit_ = on; }
    const std::vector<InsertionRecord>& audit_log() const { return audit_log_; }

  private:
    void grow() {
        const int m = max_threshold_index();
        while (next_index_ <= m) {
            const double tau = next_tau_;
            next_tau_ *= 1.0 + delta_;
            ++next_index_;
            // With the coverage fast path on, sub-unit thresholds beyond the
            // lowest bucket are skipped: integer gains make all of them
            // behave exactly like the lowest bucket.
            if (prune_sub_unit_ && tau < 1.0) continue;
            buckets_.push_back(ThresholdBucket{tau, {}});
        }
    }

    void offer(const Element& v, SubmodularOracle& f) {
        const bool exact = f.kind() == FuncKind::Coverage;
        for (ThresholdBucket& b : buckets_) {
            if (b.solution.size() >= k_) continue;
            assert(!b.solution.contains(v.index));
            const double gain = f.value_with(b.solution.members, v) - b.solution.value;
            const bool accept = exact ? gain >= b.tau : gain >= b.tau - kGainTolerance;
            if (accept) {
                b.solution.add(v, b.solution.value + gain);
                if (audit_) audit_log_.push_back(InsertionRecord{v.index, b.tau, gain});
            }
        }
    }

    std::uint32_t k_;
    double delta_;
    double log_one_plus_delta_;
    bool prune_sub_unit_;
    double first_value_ = 0.0;
    double running_max_ = 0.0;
    std::uint64_t start_index_ = 0;
    std::uint64_t last_index_ = 0;
    std::vector<ThresholdBucket> buckets_;
    double next_tau_ = 0.0;
    int next_index_ = 0;
    bool audit_ = false;
    std::vector<InsertionRecord> audit_log_;
};

}  // namespace submod
