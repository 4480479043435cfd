#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

namespace submod {

// Coverage payloads are sorted, duplicate-free id lists; vector payloads are
// fixed-dimension feature vectors. A stream uses one payload kind throughout.
using IdSet = std::vector<std::uint32_t>;
using FeatureVec = std::vector<double>;

// One stream item. `index` is the 1-based arrival position and is the element's
// identity: window membership and report output are positional, so two items
// with equal payloads stay distinguishable.
struct Element {
    std::uint64_t index = 0;
    std::variant<IdSet, FeatureVec> payload;

    bool holds_ids() const { return std::holds_alternative<IdSet>(payload); }

    const IdSet& ids() const {
        if (!holds_ids()) throw std::invalid_argument("element payload is not an id-set");
        return std::get<IdSet>(payload);
    }

    const FeatureVec& features() const {
        if (holds_ids()) throw std::invalid_argument("element payload is not a feature vector");
        return std::get<FeatureVec>(payload);
    }
};

inline Element make_coverage_element(std::uint64_t index, IdSet ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return Element{index, std::move(ids)};
}

inline Element make_vector_element(std::uint64_t index, FeatureVec features) {
    return Element{index, std::move(features)};
}

// A candidate solution with its memoized objective value. Members are kept in
// insertion order; `value` is maintained incrementally by callers so that
// reading it never costs an oracle evaluation.
struct SolutionSet {
    std::vector<Element> members;
    double value = 0.0;

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }

    bool contains(std::uint64_t element_index) const {
        for (const Element& m : members)
            if (m.index == element_index) return true;
        return false;
    }

    void add(const Element& v, double new_value) {
        members.push_back(v);
        value = new_value;
    }

    std::vector<std::uint64_t> indices() const {
        std::vector<std::uint64_t> out;
        out.reserve(members.size());
        for (const Element& m : members) out.push_back(m.index);
        return out;
    }
};

}  // namespace submod
