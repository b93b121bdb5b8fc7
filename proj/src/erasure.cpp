#include "skewconv/erasure.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "skewconv/common.hpp"

namespace skewconv {

namespace {

size_t window_cols(const ConvCode& code, unsigned j) {
    return static_cast<size_t>(code.n) * (j + 1);
}

std::vector<size_t> unerased_columns(size_t n_cols, const std::vector<size_t>& erased) {
    std::vector<size_t> keep;
    size_t ei = 0;
    for (size_t c = 1; c <= n_cols; ++c) {
        if (ei < erased.size() && erased[ei] == c) {
            ++ei;
            continue;
        }
        keep.push_back(c - 1); // 0-based for matrix selection
    }
    return keep;
}

} // namespace

ErasurePattern ErasurePattern::make(unsigned j, std::vector<size_t> erased) {
    std::sort(erased.begin(), erased.end());
    erased.erase(std::unique(erased.begin(), erased.end()), erased.end());
    if (!erased.empty() && erased.front() == 0)
        throw std::invalid_argument("erased column indices are 1-based");
    return ErasurePattern{j, std::move(erased)};
}

bool recoverable(const ConvCode& code, const ErasurePattern& p) {
    size_t n_cols = window_cols(code, p.j);
    for (size_t c : p.erased) {
        if (c < 1 || c > n_cols) throw std::invalid_argument("erased column index out of range");
    }
    size_t rows = static_cast<size_t>(code.k) * (p.j + 1);
    TruncatedMatrix t = truncate(code.generator(), p.j, TruncKind::Generator);
    std::vector<size_t> keep = unerased_columns(n_cols, p.erased);
    return t.mat.select_columns(keep).rank() == rows;
}

std::vector<FieldElement> encode_window(const ConvCode& code, unsigned j,
                                        std::span<const FieldElement> message) {
    TruncatedMatrix t = truncate(code.generator(), j, TruncKind::Generator);
    return row_times_matrix(message, t.mat);
}

std::vector<FieldElement> recover(const ConvCode& code, const ErasurePattern& p,
                                  std::span<const FieldElement> received) {
    size_t n_cols = window_cols(code, p.j);
    for (size_t c : p.erased) {
        if (c < 1 || c > n_cols) throw std::invalid_argument("erased column index out of range");
    }
    TruncatedMatrix t = truncate(code.generator(), p.j, TruncKind::Generator);
    std::vector<size_t> keep = unerased_columns(n_cols, p.erased);
    if (received.size() != keep.size())
        throw std::invalid_argument("received word length does not match unerased columns");
    FieldMatrix sub = t.mat.select_columns(keep);
    if (sub.rank() != t.mat.rows()) throw UnrecoverableError("erasure pattern is unrecoverable");
    LeftSolveResult res = solve_left(sub, received);
    if (res.status == SolveStatus::Inconsistent)
        throw InconsistentReceivedError("received symbols are not a codeword restriction");
    if (res.status != SolveStatus::Unique)
        throw UnrecoverableError("erasure pattern is unrecoverable");
    // re-encode and compare on the unerased coordinates
    std::vector<FieldElement> full = row_times_matrix(res.solution, t.mat);
    for (size_t i = 0; i < keep.size(); ++i) {
        if (full[keep[i]] != received[i])
            throw InconsistentReceivedError("re-encoding mismatch on unerased symbols");
    }
    return res.solution;
}

SimReport simulate(const ConvCode& code, unsigned j, double p, uint64_t trials, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("erasure probability must be in [0, 1]");
    auto start = std::chrono::steady_clock::now();

    SimReport rep;
    rep.j = j;
    rep.p = p;
    rep.seed = seed;
    rep.trials = trials;

    size_t n_cols = window_cols(code, j);
    size_t msg_len = static_cast<size_t>(code.k) * (j + 1);
    const FieldPtr& F = code.field;
    std::map<std::vector<size_t>, uint64_t> failures;

    for (uint64_t trial = 0; trial < trials; ++trial) {
        DetRng rng = DetRng::for_trial(seed, trial);
        std::vector<size_t> erased;
        for (size_t c = 1; c <= n_cols; ++c) {
            if (rng.unit() < p) erased.push_back(c);
        }
        ErasurePattern pat{j, erased};
        if (!recoverable(code, pat)) {
            ++failures[erased];
            continue;
        }
        std::vector<FieldElement> msg;
        msg.reserve(msg_len);
        for (size_t i = 0; i < msg_len; ++i) msg.push_back(F->from_index(rng.below(F->order())));
        std::vector<FieldElement> word = encode_window(code, j, msg);
        std::vector<FieldElement> kept;
        for (size_t c : unerased_columns(n_cols, erased)) kept.push_back(word[c]);
        std::vector<FieldElement> back = recover(code, pat, kept);
        if (back != msg) throw VerificationError("recover round-trip mismatch (bug)");
        ++rep.recovered;
    }
    for (auto& [pat, count] : failures) rep.failed_patterns.emplace_back(pat, count);

    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
}

CensusReport erasure_census(const ConvCode& code, unsigned j) {
    size_t n_cols = window_cols(code, j);
    if (n_cols > 16) throw InfeasibleError("erasure census limited to pattern spaces <= 2^16");
    auto start = std::chrono::steady_clock::now();

    CensusReport rep;
    rep.j = j;
    rep.patterns = 1ULL << n_cols;
    for (uint64_t mask = 0; mask < rep.patterns; ++mask) {
        CensusRow row;
        for (size_t b = 0; b < n_cols; ++b)
            if (mask & (1ULL << b)) row.erased.push_back(b + 1);
        row.recoverable = recoverable(code, ErasurePattern{j, row.erased});
        if (row.recoverable) ++rep.recoverable_count;
        rep.rows.push_back(std::move(row));
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
}

std::string census_csv(const CensusReport& rep) {
    std::ostringstream os;
    os << "pattern,erased_count,recoverable\n";
    for (size_t mask = 0; mask < rep.rows.size(); ++mask) {
        const CensusRow& row = rep.rows[mask];
        os << mask << "," << row.erased.size() << "," << (row.recoverable ? "yes" : "no") << "\n";
    }
    return os.str();
}

} // namespace skewconv
