#pragma once

#include "skewconv/construction.hpp"

namespace skewconv {

struct UnrecoverableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistentReceivedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Erasures in a decoding window of j+1 blocks. Column indices are 1-based
/// in [1, n(j+1)], matching external reports; they are normalized to a
/// sorted duplicate-free list.
struct ErasurePattern {
    unsigned j = 0;
    std::vector<size_t> erased;

    static ErasurePattern make(unsigned j, std::vector<size_t> erased);
};

/// The window is recoverable iff the unerased columns of the truncated
/// generator matrix retain full row rank k(j+1).
bool recoverable(const ConvCode& code, const ErasurePattern& p);

/// Truncated encoding: message of k(j+1) symbols -> n(j+1) symbols.
std::vector<FieldElement> encode_window(const ConvCode& code, unsigned j,
                                        std::span<const FieldElement> message);

/// Re-derives the message from the unerased symbols (given in column order)
/// and checks consistency by re-encoding. Throws UnrecoverableError or
/// InconsistentReceivedError.
std::vector<FieldElement> recover(const ConvCode& code, const ErasurePattern& p,
                                  std::span<const FieldElement> received);

struct SimReport {
    unsigned j = 0;
    double p = 0;
    uint64_t seed = 0;
    uint64_t trials = 0;
    uint64_t recovered = 0;
    // distinct unrecoverable patterns with occurrence counts, sorted
    std::vector<std::pair<std::vector<size_t>, uint64_t>> failed_patterns;
    double wall_ms = 0;
};

/// Seeded i.i.d. per-column erasure trials; every recoverable pattern is
/// round-tripped through encode/recover on a random message. Per-trial
/// generator splitting keeps the report independent of execution order.
SimReport simulate(const ConvCode& code, unsigned j, double p, uint64_t trials, uint64_t seed);

struct CensusRow {
    std::vector<size_t> erased; // 1-based
    bool recoverable = false;
};

struct CensusReport {
    unsigned j = 0;
    uint64_t patterns = 0;
    uint64_t recoverable_count = 0;
    std::vector<CensusRow> rows;
    double wall_ms = 0;
};

/// Exhaustive sweep over all 2^{n(j+1)} erasure patterns; guarded to
/// pattern spaces of at most 2^16.
CensusReport erasure_census(const ConvCode& code, unsigned j);

/// CSV rows "pattern,erased_count,recoverable"; pattern bit b set means
/// column b+1 is erased. Rows are emitted in pattern order.
std::string census_csv(const CensusReport& rep);

} // namespace skewconv
