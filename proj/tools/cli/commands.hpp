#pragma once

#include "qstirling/multiset.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qstir::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

enum class Format { text, json, csv };

// Inclusive range of half-edge / block counts, written "a..b" or "k".
struct MRange {
    std::size_t first = 0;
    std::size_t last = 3;
};

struct RunConfig {
    std::string multiset;
    std::size_t terms = 10;
    std::size_t max_size = kDefaultSizeCap;
    Format format = Format::text;
    std::string method = "words";
    bool phi_only = false;
    std::optional<std::string> spot;
    MRange m_range;
};

// Upper bound on --max-size and on K for every command; QSTIRLING_GLOBAL_CAP overrides it.
std::size_t global_cap();

MRange parse_m_range(std::string_view text);
Format parse_format(std::string_view text);

int cmd_poly(const RunConfig& config, std::ostream& out);
int cmd_verify_identity(const RunConfig& config, std::ostream& out);
int cmd_bijections(const RunConfig& config, std::ostream& out);
int cmd_analyze(const RunConfig& config, std::ostream& out);
int cmd_count(const RunConfig& config, std::ostream& out);
int cmd_sweep(const RunConfig& config, std::ostream& out);

// Parses the command line (args excludes the program name), dispatches, and maps
// library errors to exit code 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qstir::cli
