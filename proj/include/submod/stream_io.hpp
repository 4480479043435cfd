#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "submod/baselines.hpp"
#include "submod/element.hpp"

namespace submod {

// Generator parameters for synthetic streams; a stand-in for on-disk datasets.
struct SyntheticSpec {
    enum class Kind { Coverage, Vectors };
    Kind kind = Kind::Coverage;
    std::uint64_t n = 0;
    std::uint32_t universe = 0;  // coverage id range [0, universe)
    std::uint32_t lo = 1;        // coverage set size range
    std::uint32_t hi = 1;
    std::uint32_t dim = 0;       // vector dimension

    void validate() const {
        if (n < 1) throw std::invalid_argument("synthetic: n must be >= 1");
        if (kind == Kind::Coverage) {
            if (lo < 1 || lo > hi) throw std::invalid_argument("synthetic: need 1 <= lo <= hi");
            if (universe < hi)
                throw std::invalid_argument("synthetic: universe must be >= hi");
        } else {
            if (dim < 1) throw std::invalid_argument("synthetic: dimension must be >= 1");
        }
    }
};

namespace detail {

inline double standard_normal(std::mt19937_64& rng) {
    // Box-Muller from raw bits; std::normal_distribution output is
    // implementation-defined and would break cross-library reproducibility.
    double u1;
    do {
        u1 = uniform01(rng);
    } while (u1 <= 0.0);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace detail

// Seeded, bit-reproducible stream of the requested kind; indices are 1-based.
inline std::vector<Element> gen_synthetic(const SyntheticSpec& spec, std::uint64_t seed) {
    spec.validate();
    std::mt19937_64 rng(seed);
    std::vector<Element> out;
    out.reserve(spec.n);
    for (std::uint64_t t = 1; t <= spec.n; ++t) {
        if (spec.kind == SyntheticSpec::Kind::Coverage) {
            const std::uint32_t size =
                spec.lo + static_cast<std::uint32_t>(
                              detail::uniform_below(rng, spec.hi - spec.lo + 1));
            IdSet ids;
            ids.reserve(size);
            while (ids.size() < size) {
                const auto id =
                    static_cast<std::uint32_t>(detail::uniform_below(rng, spec.universe));
                bool dup = false;
                for (std::uint32_t existing : ids) dup = dup || existing == id;
                if (!dup) ids.push_back(id);
            }
            out.push_back(make_coverage_element(t, std::move(ids)));
        } else {
            FeatureVec v(spec.dim);
            for (double& x : v) x = detail::standard_normal(rng);
            out.push_back(make_vector_element(t, std::move(v)));
        }
    }
    return out;
}

// One element per line, whitespace-separated non-negative integer ids,
// duplicates collapsed. A blank line is an empty (zero-value) set; it keeps
// its arrival index so that downstream window arithmetic stays positional.
inline std::vector<Element> load_coverage_stream(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::vector<Element> out;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        IdSet ids;
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            std::uint64_t id = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
            if (ec != std::errc() || ptr != tok.data() + tok.size() ||
                id > std::numeric_limits<std::uint32_t>::max())
                throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                                         ": invalid id '" + tok + "'");
            ids.push_back(static_cast<std::uint32_t>(id));
        }
        out.push_back(make_coverage_element(lineno, std::move(ids)));
    }
    return out;
}

// One element per line, whitespace-separated decimal reals; the first line
// fixes the dimension.
inline std::vector<Element> load_vector_stream(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::vector<Element> out;
    std::string line;
    std::uint64_t lineno = 0;
    std::size_t dim = 0;
    while (std::getline(in, line)) {
        ++lineno;
        FeatureVec v;
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            char* end = nullptr;
            const double x = std::strtod(tok.c_str(), &end);
            if (end != tok.c_str() + tok.size() || !std::isfinite(x))
                throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                                         ": invalid value '" + tok + "'");
            v.push_back(x);
        }
        if (out.empty()) {
            if (v.empty())
                throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                                         ": empty vector");
            dim = v.size();
        } else if (v.size() != dim) {
            throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                                     ": expected " + std::to_string(dim) + " values, got " +
                                     std::to_string(v.size()));
        }
        out.push_back(make_vector_element(lineno, std::move(v)));
    }
    return out;
}

// Compact CLI form: "coverage:n=100,universe=50,lo=1,hi=5" or "vectors:n=100,d=5".
inline SyntheticSpec parse_synthetic_spec(std::string_view text) {
    SyntheticSpec spec;
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("synthetic spec: expected '<kind>:<key>=<value>,...'");
    const std::string_view kind = text.substr(0, colon);
    if (kind == "coverage")
        spec.kind = SyntheticSpec::Kind::Coverage;
    else if (kind == "vectors")
        spec.kind = SyntheticSpec::Kind::Vectors;
    else
        throw std::invalid_argument("synthetic spec: unknown kind '" + std::string(kind) + "'");

    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        const std::string_view pair =
            comma == std::string_view::npos ? rest : rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const std::size_t eq = pair.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("synthetic spec: expected key=value, got '" +
                                        std::string(pair) + "'");
        const std::string_view key = pair.substr(0, eq);
        const std::string_view val = pair.substr(eq + 1);
        std::uint64_t num = 0;
        const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), num);
        if (ec != std::errc() || ptr != val.data() + val.size())
            throw std::invalid_argument("synthetic spec: invalid number '" + std::string(val) +
                                        "'");
        if (key == "n")
            spec.n = num;
        else if (key == "universe")
            spec.universe = static_cast<std::uint32_t>(num);
        else if (key == "lo")
            spec.lo = static_cast<std::uint32_t>(num);
        else if (key == "hi")
            spec.hi = static_cast<std::uint32_t>(num);
        else if (key == "d")
            spec.dim = static_cast<std::uint32_t>(num);
        else
            throw std::invalid_argument("synthetic spec: unknown key '" + std::string(key) + "'");
    }
    spec.validate();
    return spec;
}

}  // namespace submod
