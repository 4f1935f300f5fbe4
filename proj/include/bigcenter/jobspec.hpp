#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gauge.hpp"
#include "vaspec.hpp"

namespace bigcenter {

// Parse failure with the offending line for the CLI to report.
struct SpecError {
    int line = 0;
    std::string message;
};

enum class OutputMode { text, structured };

// Declarative problem description read from the line-oriented spec
// format (see README for the grammar).
struct JobSpec {
    std::string command;
    std::string group = "sl2";
    int truncation = 8;
    std::uint64_t seed = 12345;
    OutputMode output = OutputMode::text;
    int mode = 1;                        // single-mode commands (embed, twist)
    int m_lo = 0, m_hi = 3, n_lo = 0, n_hi = 3;
    std::optional<int> criterion;

    std::string algebra_name = "symplectic-fermions";
    std::optional<VASpec> inline_algebra;

    std::vector<Mat2<Rational>> connection;   // regular coefficients by z power
    std::string singular = "none";            // none | semisimple-lam | nilpotent
    std::vector<Mat2<Rational>> gauge_f;      // F coefficients for the gauge command

    VASpec algebra() const;
    Connection make_conn(int order) const;
};

// Parses the spec text; returns the job or a located error.
std::variant<JobSpec, SpecError> parse_jobspec(const std::string& text);

std::variant<JobSpec, SpecError> parse_jobspec_file(const std::string& path);

} // namespace bigcenter
