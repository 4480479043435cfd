#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "submod/element.hpp"

namespace submod {

enum class FuncKind { Coverage, LogDet };

// Evaluation contract for a monotone submodular set function over stream
// elements. Every public evaluation increments the call counter by exactly
// one; the counter is the cost unit reported by the benchmark driver.
//
// Coverage: f(S) = |union of the members' id-sets| (integer-valued).
// LogDet:   f(S) = 1/2 * ln det(I + K) with K(i,j) = exp(-||si-sj||^2 / h^2),
//           computed from scratch per call via a Cholesky factorization
//           (I + K is positive definite since K is PSD).
class SubmodularOracle {
  public:
    explicit SubmodularOracle(FuncKind kind, double kernel_bandwidth = 0.75)
        : kind_(kind), bandwidth_(kernel_bandwidth) {
        if (!(bandwidth_ > 0.0))
            throw std::invalid_argument("kernel bandwidth must be positive");
    }

    FuncKind kind() const { return kind_; }
    double kernel_bandwidth() const { return bandwidth_; }
    std::uint64_t eval_count() const { return evals_; }

    double value(std::span<const Element> s) {
        ++evals_;
        return compute(s, nullptr);
    }

    // f(S u {extra}); counts as a single evaluation.
    double value_with(std::span<const Element> s, const Element& extra) {
        ++evals_;
        return compute(s, &extra);
    }

    double singleton(const Element& v) {
        ++evals_;
        return compute({}, &v);
    }

  private:
    double compute(std::span<const Element> s, const Element* extra) const {
        return kind_ == FuncKind::Coverage ? coverage(s, extra) : logdet(s, extra);
    }

    double coverage(std::span<const Element> s, const Element* extra) const {
        std::vector<std::uint32_t> ids;
        for (const Element& e : s) ids.insert(ids.end(), e.ids().begin(), e.ids().end());
        if (extra) ids.insert(ids.end(), extra->ids().begin(), extra->ids().end());
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        return static_cast<double>(ids.size());
    }

    double logdet(std::span<const Element> s, const Element* extra) const {
        std::vector<const FeatureVec*> pts;
        pts.reserve(s.size() + 1);
        for (const Element& e : s) pts.push_back(&e.features());
        if (extra) pts.push_back(&extra->features());
        const std::size_t n = pts.size();
        if (n == 0) return 0.0;

        const std::size_t dim = pts[0]->size();
        for (const FeatureVec* p : pts) {
            if (p->size() != dim)
                throw std::invalid_argument("logdet: mixed vector dimensions");
            for (double x : *p)
                if (!std::isfinite(x))
                    throw std::invalid_argument("logdet: non-finite vector entry");
        }

        // A = I + K, then ln det(A) = 2 * sum(ln L_jj) from A = L L^T.
        const double inv_h2 = 1.0 / (bandwidth_ * bandwidth_);
        std::vector<double> a(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i * n + i] = 2.0;  // 1 + exp(0)
            for (std::size_t j = i + 1; j < n; ++j) {
                double d2 = 0.0;
                for (std::size_t c = 0; c < dim; ++c) {
                    const double diff = (*pts[i])[c] - (*pts[j])[c];
                    d2 += diff * diff;
                }
                const double kij = std::exp(-d2 * inv_h2);
                a[i * n + j] = kij;
                a[j * n + i] = kij;
            }
        }

        double half_logdet = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double diag = a[j * n + j];
            for (std::size_t m = 0; m < j; ++m) diag -= a[j * n + m] * a[j * n + m];
            if (!(diag > 0.0))
                throw std::runtime_error("logdet: factorization lost positive definiteness");
            const double ljj = std::sqrt(diag);
            a[j * n + j] = ljj;
            half_logdet += std::log(ljj);
            for (std::size_t i = j + 1; i < n; ++i) {
                double v = a[i * n + j];
                for (std::size_t m = 0; m < j; ++m) v -= a[i * n + m] * a[j * n + m];
                a[i * n + j] = v / ljj;
            }
        }
        return half_logdet;
    }

    FuncKind kind_;
    double bandwidth_;
    std::uint64_t evals_ = 0;
};

// f(base u {v}) - f(base); one fresh evaluation, the cached base value is free.
inline double marginal_gain(SubmodularOracle& f, const SolutionSet& base, const Element& v) {
    if (base.contains(v.index))
        throw std::invalid_argument("marginal_gain: element already in base set");
    return f.value_with(base.members, v) - base.value;
}

inline double singleton_value(SubmodularOracle& f, const Element& v) { return f.singleton(v); }

// Running extremes of surviving singleton values; spread = max/min is the
// quantity the index-count and threshold-count bounds are expressed in.
struct StreamStats {
    double running_max = 0.0;
    double running_min = std::numeric_limits<double>::infinity();
    std::uint64_t observed = 0;

    void observe(double singleton) {
        if (!(singleton > 0.0))
            throw std::invalid_argument("StreamStats: singleton values must be positive");
        running_max = std::max(running_max, singleton);
        running_min = std::min(running_min, singleton);
        ++observed;
    }

    double spread() const { return observed == 0 ? 1.0 : running_max / running_min; }
};

}  // namespace submod
