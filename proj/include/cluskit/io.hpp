#pragma once

// File-format endpoints: quiver JSON ingestion, the newline-delimited JSON
// mutation-graph cache, and the run report.

#include <stdexcept>
#include <string>

#include "cluskit/quiver.hpp"
#include "cluskit/seed_engine.hpp"
#include "cluskit/verify.hpp"

namespace cluskit {

struct QuiverFileError : std::runtime_error {
    explicit QuiverFileError(const std::string& what) : std::runtime_error(what) {}
};

struct CacheError : std::runtime_error {
    CacheError(int line_number, const std::string& what)
        : std::runtime_error("cache line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
    int line;
};

/// Loads {"n": <int>, "matrix": [[int,...],...]} and validates the exchange
/// matrix invariants.  Throws QuiverFileError with a field diagnostic.
ExchangeMatrix parse_quiver_file(const std::string& path);
ExchangeMatrix parse_quiver_text(const std::string& text);

/// One CanonicalSeed per line: {"cluster": [canonical texts], "matrix":
/// nested arrays, "adj": sorted neighbor line indices}.  Seeds appear in
/// canonical order, so a reload reproduces the identical graph.
void save_graph_cache(const MutationGraph& g, const std::string& path);
MutationGraph load_graph_cache(const std::string& path);

/// FNV-1a 64 of a byte string, rendered as 16 hex digits.
std::string content_digest(const std::string& bytes);

/// Top-level run report.  Byte-identical across repeated runs except for
/// timing_ms, which determinism checks zero out.
struct Report {
    std::string command;
    std::string input_digest;
    std::string verdict;  // PASS, FAIL or INCONCLUSIVE-TRUNCATED
    long long seeds = 0;
    long long clusters = 0;
    long long variables = 0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    long long timing_ms = 0;

    int exit_code() const;
    std::string to_json() const;  // stable key order
    std::string to_text() const;

    void absorb(const VerifyReport& v);
    void finalize_verdict(bool truncated);
};

}  // namespace cluskit
