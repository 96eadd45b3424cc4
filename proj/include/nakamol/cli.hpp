#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "nakamol/quiver.hpp"
#include "nakamol/schur.hpp"
#include "nakamol/series.hpp"

namespace nakamol {

struct SpecParseError : std::runtime_error {
    SpecParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line(line),
          col(col) {}
    int line, col;
};

struct QuiverSpecFile {
    QuiverData quiver;
    DimData dims;
    std::optional<ThetaVector> theta;
    std::optional<MultiPartition> lambda;
};

// Line-oriented sections: [quiver] vertices = ...; arrow = src -> dst (repeated);
// [dims] v = ...; w = ...; [git] theta = ...; [insertion] lambda = "...".
QuiverSpecFile parse_spec(const std::string& text);
std::string serialize_spec(const QuiverSpecFile& spec);

struct RunOptions {
    std::string command;
    int order = -1;       // --order (series/taut truncation, hbar-degree)
    int max_degree = -1;  // --max-degree (koszul weighted-degree bound)
    std::optional<std::string> lambda_text;  // --lambda overrides the spec file
    std::optional<std::vector<int>> theta;   // --theta overrides the spec file
    std::string format = "json";             // json | csv
    bool no_cache = false;
    std::uint64_t seed = 1;
    int jtype_cap = -1;  // expansion cap override (determinism checks)
    int threads = 1;     // accepted for interface parity; results thread-independent
};

struct RunReport {
    nlohmann::json body;  // {command, input_hash, results}; canonical
    bool cache_hit = false;
    int exit_code = 0;
    std::string render(const std::string& format) const;  // json or csv
};

// Dispatch onto the library; throws std::invalid_argument for bad inputs and
// std::runtime_error for guard violations. Crosscheck mismatches set
// exit_code = 3 instead of throwing.
RunReport run_command(const QuiverSpecFile& spec, const RunOptions& opts);

// Series serialization shared by reports: sorted records with "p/q" coefficients.
nlohmann::json series_to_json(const TruncatedSeries& s);

// Stable 64-bit content hash (cache keys / input echo).
std::uint64_t content_hash(const std::string& text);

extern const char* kLibraryVersion;

}  // namespace nakamol
