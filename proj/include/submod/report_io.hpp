#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>

#include "submod/window.hpp"

namespace submod {

enum class ReportFormat { Jsonl, Csv };

// Full round-trip precision; integral values keep one decimal so that the
// column stays visibly real-valued.
inline std::string format_value(double x) {
    char buf[40];
    if (x == std::floor(x) && std::fabs(x) < 1e15)
        std::snprintf(buf, sizeof(buf), "%.1f", x);
    else
        std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline void write_jsonl(std::span<const StepReport> reports, std::ostream& out) {
    for (const StepReport& r : reports) {
        out << "{\"t\":" << r.t << ",\"value\":" << format_value(r.value) << ",\"solution\":[";
        for (std::size_t i = 0; i < r.solution.size(); ++i) {
            if (i > 0) out << ',';
            out << r.solution[i];
        }
        out << "],\"evals_step\":" << r.evals_step << ",\"evals_cum\":" << r.evals_cum
            << ",\"stored_items\":" << r.stored_items << ",\"num_indices\":" << r.num_indices
            << "}\n";
    }
}

inline void write_csv(std::span<const StepReport> reports, std::ostream& out) {
    out << "t,value,solution,evals_step,evals_cum,stored_items,num_indices\n";
    for (const StepReport& r : reports) {
        out << r.t << ',' << format_value(r.value) << ',';
        for (std::size_t i = 0; i < r.solution.size(); ++i) {
            if (i > 0) out << ';';
            out << r.solution[i];
        }
        out << ',' << r.evals_step << ',' << r.evals_cum << ',' << r.stored_items << ','
            << r.num_indices << '\n';
    }
}

inline std::string reports_to_string(std::span<const StepReport> reports, ReportFormat format) {
    std::ostringstream out;
    format == ReportFormat::Jsonl ? write_jsonl(reports, out) : write_csv(reports, out);
    return out.str();
}

inline void emit_reports(std::span<const StepReport> reports, ReportFormat format,
                         const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    format == ReportFormat::Jsonl ? write_jsonl(reports, out) : write_csv(reports, out);
    out.flush();
    if (!out) throw std::runtime_error("write failure: " + path);
}

}  // namespace submod
