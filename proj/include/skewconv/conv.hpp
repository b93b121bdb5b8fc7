#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "skewconv/linalg.hpp"

namespace skewconv {

/// k x n matrix of polynomials in the delay operator D over F_{q^t},
/// stored as the list of coefficient blocks G_0, ..., G_m.
class PolyMatrix {
  public:
    PolyMatrix(FieldPtr field, size_t rows, size_t cols); // zero matrix, memory 0
    static PolyMatrix from_blocks(std::vector<FieldMatrix> blocks);

    const FieldPtr& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    /// Largest block index kept after trimming; the zero matrix has memory 0.
    unsigned memory() const { return static_cast<unsigned>(blocks_.size()) - 1; }

    /// Coefficient block of D^i; zero matrix beyond memory().
    FieldMatrix coeff_block(unsigned i) const;
    const std::vector<FieldMatrix>& blocks() const { return blocks_; }

    /// Degree of entry (r, c); -1 for a zero entry.
    int entry_degree(size_t r, size_t c) const;

    bool operator==(const PolyMatrix& o) const;

  private:
    FieldPtr field_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<FieldMatrix> blocks_;
};

struct DegreeStats {
    std::vector<unsigned> row_degrees;
    unsigned memory = 0;            // max row degree
    uint64_t overall = 0;           // sum of row degrees
    bool generic = false;           // all row degrees in {memory, memory-1}
};

/// Throws std::invalid_argument if some row is identically zero.
DegreeStats degree_stats(const PolyMatrix& g);

/// Row r holds the D^{row_degree(r)} coefficients of row r.
FieldMatrix highest_order_matrix(const PolyMatrix& g);

/// Minimal (row degrees sum to the code degree) iff the highest-order
/// matrix has full row rank.
bool is_minimal(const PolyMatrix& g);

enum class TruncKind { Generator, Parity };

/// Sliding truncation. Generator kind places block M_{c-r} at block position
/// (r, c) for c >= r (upper triangular); parity kind places M_{r-c} at
/// (r, c) for r >= c (lower triangular). j+1 block rows and columns.
struct TruncatedMatrix {
    TruncKind kind = TruncKind::Generator;
    unsigned j = 0;
    size_t block_rows = 0; // rows of one block
    size_t n = 0;          // columns of one block
    FieldMatrix mat;
};

TruncatedMatrix truncate(const PolyMatrix& m, unsigned j, TruncKind kind = TruncKind::Generator);

struct SingletonData {
    unsigned n = 0, k = 0;
    uint64_t delta = 0;
    uint64_t free_distance_bound = 0; // (n-k)(floor(delta/k)+1) + delta + 1
    unsigned L = 0;                   // floor(delta/k) + floor(delta/(n-k))
    unsigned M = 0;                   // floor(delta/k) + ceil(delta/(n-k))
    uint64_t column_bound(unsigned j) const {
        return static_cast<uint64_t>(n - k) * (j + 1) + 1;
    }
};

SingletonData singleton_data(unsigned n, unsigned k, uint64_t delta);

enum class DistanceEngine { Auto, MessageEnum, SupportEnum };

/// Exact j-th column distance: minimum weight over truncated codewords with
/// a nonzero leading message block. Requires full-rank G_0. Enumeration is
/// guarded; an infeasible request throws InfeasibleError, never samples.
uint64_t column_distance_exact(const PolyMatrix& g, unsigned j,
                               DistanceEngine engine = DistanceEngine::Auto);

struct FreeDistanceScan {
    uint64_t upper_bound = 0;
    unsigned max_deg = 0;
    unsigned achieving_degree = 0; // smallest message degree attaining the bound
};

/// Minimum codeword weight over nonzero messages of degree <= max_deg; an
/// upper bound on the free distance.
FreeDistanceScan free_distance_upper(const PolyMatrix& g, unsigned max_deg);

/// True when the sorted 0-based column set qualifies for the minor criterion
/// of the truncation's kind.
bool qualifying_columns(const TruncatedMatrix& t, std::span<const size_t> cols);

/// Full-size minor on the given 0-based columns.
FieldElement truncated_minor(const TruncatedMatrix& t, std::span<const size_t> cols);

/// Visits every full-row-size column subset in lexicographic order.
/// Callback returns false to stop early.
void for_each_column_subset(size_t n_cols, size_t size,
                            const std::function<bool(std::span<const size_t>)>& visit);

struct MinorCheckReport {
    bool ok = false;
    uint64_t minors_checked = 0;               // qualifying minors examined
    std::vector<size_t> witness_columns;       // 1-based, first failing set
};

/// Checks that every qualifying full-size minor of the truncation is nonzero.
MinorCheckReport mdp_minor_check(const TruncatedMatrix& t, uint64_t subset_guard = 10'000'000);

struct MdpReport {
    bool is_mdp = false;
    unsigned L = 0;
    uint64_t delta = 0;
    MinorCheckReport minors;
};

/// Maximum-distance-profile decision via the minor criterion at j = L.
/// Preconditions (minimal, generic row degrees) are violations, reported as
/// std::invalid_argument, distinct from a failing minor check.
MdpReport is_mdp(const PolyMatrix& g);

struct ProfileRow {
    unsigned j = 0;
    uint64_t d = 0;
    uint64_t bound = 0;
    bool met = false;
};

struct DistanceProfile {
    unsigned n = 0, k = 0;
    uint64_t delta = 0;
    unsigned L = 0, M = 0;
    std::vector<ProfileRow> rows;
    std::optional<bool> mdp;           // set when j reached L
    std::optional<bool> strongly_mds;  // set when j reached M
    std::optional<FreeDistanceScan> free_scan;
};

DistanceProfile distance_profile(const PolyMatrix& g, unsigned jmax,
                                 std::optional<unsigned> free_max_deg = {},
                                 DistanceEngine engine = DistanceEngine::Auto);

/// CSV with header "j,d_j_c,bound,met" plus a trailing free-distance line.
std::string profile_csv(const DistanceProfile& p);

} // namespace skewconv
