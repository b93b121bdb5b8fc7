#include "skewconv/conv.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "skewconv/common.hpp"

namespace skewconv {

namespace {
constexpr uint64_t kEnumGuard = 10'000'000;
} // namespace

PolyMatrix::PolyMatrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("empty polynomial matrix");
    blocks_.emplace_back(field_, rows_, cols_);
}

PolyMatrix PolyMatrix::from_blocks(std::vector<FieldMatrix> blocks) {
    if (blocks.empty()) throw std::invalid_argument("need at least one coefficient block");
    const FieldPtr& f = blocks[0].field();
    for (const auto& b : blocks) {
        if (!b.field() || !b.field()->same(*f)) throw std::invalid_argument("mixed-field operands");
        if (b.rows() != blocks[0].rows() || b.cols() != blocks[0].cols())
            throw std::invalid_argument("coefficient blocks must share a shape");
    }
    while (blocks.size() > 1 && blocks.back().is_zero()) blocks.pop_back();
    PolyMatrix m(f, blocks[0].rows(), blocks[0].cols());
    m.blocks_ = std::move(blocks);
    return m;
}

FieldMatrix PolyMatrix::coeff_block(unsigned i) const {
    if (i < blocks_.size()) return blocks_[i];
    return FieldMatrix(field_, rows_, cols_);
}

int PolyMatrix::entry_degree(size_t r, size_t c) const {
    for (size_t i = blocks_.size(); i-- > 0;) {
        if (!blocks_[i].at(r, c).is_zero()) return static_cast<int>(i);
    }
    return -1;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && blocks_ == o.blocks_;
}

DegreeStats degree_stats(const PolyMatrix& g) {
    DegreeStats s;
    s.row_degrees.resize(g.rows());
    for (size_t r = 0; r < g.rows(); ++r) {
        int best = -1;
        for (size_t c = 0; c < g.cols(); ++c) best = std::max(best, g.entry_degree(r, c));
        if (best < 0) throw std::invalid_argument("generator matrix has a zero row");
        s.row_degrees[r] = static_cast<unsigned>(best);
    }
    s.memory = *std::max_element(s.row_degrees.begin(), s.row_degrees.end());
    s.overall = 0;
    for (unsigned d : s.row_degrees) s.overall += d;
    s.generic = std::all_of(s.row_degrees.begin(), s.row_degrees.end(), [&](unsigned d) {
        return d == s.memory || d + 1 == s.memory;
    });
    return s;
}

FieldMatrix highest_order_matrix(const PolyMatrix& g) {
    DegreeStats s = degree_stats(g);
    FieldMatrix m(g.field(), g.rows(), g.cols());
    for (size_t r = 0; r < g.rows(); ++r) {
        FieldMatrix blk = g.coeff_block(s.row_degrees[r]);
        for (size_t c = 0; c < g.cols(); ++c) m.at(r, c) = blk.at(r, c);
    }
    return m;
}

bool is_minimal(const PolyMatrix& g) {
    return highest_order_matrix(g).rank() == g.rows();
}

TruncatedMatrix truncate(const PolyMatrix& m, unsigned j, TruncKind kind) {
    TruncatedMatrix t;
    t.kind = kind;
    t.j = j;
    t.block_rows = m.rows();
    t.n = m.cols();
    size_t rows = m.rows() * (j + 1);
    size_t cols = m.cols() * (j + 1);
    t.mat = FieldMatrix(m.field(), rows, cols);
    for (unsigned br = 0; br <= j; ++br) {
        for (unsigned bc = 0; bc <= j; ++bc) {
            unsigned idx;
            if (kind == TruncKind::Generator) {
                if (bc < br) continue;
                idx = bc - br;
            } else {
                if (br < bc) continue;
                idx = br - bc;
            }
            FieldMatrix blk = m.coeff_block(idx);
            for (size_t r = 0; r < m.rows(); ++r)
                for (size_t c = 0; c < m.cols(); ++c)
                    t.mat.at(br * m.rows() + r, bc * m.cols() + c) = blk.at(r, c);
        }
    }
    return t;
}

SingletonData singleton_data(unsigned n, unsigned k, uint64_t delta) {
    if (k == 0 || k >= n) throw std::invalid_argument("need 0 < k < n");
    SingletonData s;
    s.n = n;
    s.k = k;
    s.delta = delta;
    uint64_t fk = delta / k;
    uint64_t fnk = delta / (n - k);
    uint64_t cnk = (delta + (n - k) - 1) / (n - k);
    s.free_distance_bound = static_cast<uint64_t>(n - k) * (fk + 1) + delta + 1;
    s.L = static_cast<unsigned>(fk + fnk);
    s.M = static_cast<unsigned>(fk + cnk);
    return s;
}

namespace {

// checked s^e against the guard; 0 means overflow past the guard
uint64_t checked_pow(uint64_t s, uint64_t e, uint64_t guard) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < e; ++i) {
        if (r > guard / s) return 0;
        r *= s;
    }
    return r;
}

// sum_{s=0}^{max_size} C(n, s), saturating at guard+1
uint64_t subset_budget(size_t n, size_t max_size, uint64_t guard) {
    long double total = 0, c = 1;
    for (size_t s = 0;; ++s) {
        total += c;
        if (total > static_cast<long double>(guard)) return guard + 1;
        if (s == max_size || s == n) break;
        c = c * static_cast<long double>(n - s) / static_cast<long double>(s + 1);
    }
    return static_cast<uint64_t>(total);
}

// C(n, z), saturating at guard+1
uint64_t binom_capped(size_t n, size_t z, uint64_t guard) {
    if (z > n) return 0;
    long double c = 1;
    for (size_t s = 0; s < z; ++s) {
        c = c * static_cast<long double>(n - s) / static_cast<long double>(s + 1);
        if (c > static_cast<long double>(guard)) return guard + 1;
    }
    return static_cast<uint64_t>(c + 0.5L);
}

// odometer step over F^R by element index; false once all states are spent
bool advance_message(std::vector<uint64_t>& digits, std::vector<FieldElement>& u,
                     const FieldPtr& F) {
    for (size_t pos = digits.size(); pos-- > 0;) {
        if (digits[pos] + 1 < F->order()) {
            ++digits[pos];
            u[pos] = F->from_index(digits[pos]);
            return true;
        }
        digits[pos] = 0;
        u[pos] = F->zero();
    }
    return false;
}

uint64_t column_distance_messages(const PolyMatrix& g, unsigned j) {
    const FieldPtr& F = g.field();
    size_t k = g.rows();
    size_t R = k * (j + 1);
    TruncatedMatrix T = truncate(g, j, TruncKind::Generator);

    std::vector<uint64_t> digits(R, 0);
    std::vector<FieldElement> u(R, F->zero());
    uint64_t best = UINT64_MAX;
    while (advance_message(digits, u, F)) {
        bool leading_zero = true;
        for (size_t i = 0; i < k && leading_zero; ++i)
            if (digits[i] != 0) leading_zero = false;
        if (leading_zero) continue;
        best = std::min(best, static_cast<uint64_t>(hamming_weight(row_times_matrix(u, T.mat))));
        if (best == 1) break; // cannot go lower
    }
    return best;
}

uint64_t column_distance_supports(const PolyMatrix& g, unsigned j, uint64_t guard) {
    size_t k = g.rows();
    TruncatedMatrix T = truncate(g, j, TruncKind::Generator);
    size_t N = T.mat.cols();
    FieldMatrix rest = T.mat.drop_rows_before(k);

    // Some codeword with u_0 != 0 lives inside a support set S iff the left
    // kernel of the columns outside S is not confined to u_0 = 0, i.e.
    // rank(outside) < k + rank(outside minus the first k rows). The smallest
    // s admitting such a set is the column distance.
    uint64_t examined = 0;
    for (size_t s = 0; s <= N; ++s) {
        bool found = false;
        std::vector<size_t> outside;
        for_each_column_subset(N, s, [&](std::span<const size_t> t) {
            if (++examined > guard) throw InfeasibleError("support enumeration exceeds guard");
            outside.clear();
            size_t ti = 0;
            for (size_t c = 0; c < N; ++c) {
                if (ti < t.size() && t[ti] == c) {
                    ++ti;
                    continue;
                }
                outside.push_back(c);
            }
            FieldMatrix full = T.mat.select_columns(outside);
            FieldMatrix part = rest.select_columns(outside);
            if (full.rank() < k + part.rank()) {
                found = true;
                return false;
            }
            return true;
        });
        // s = N always succeeds (no outside constraint), so this terminates
        if (found) return s;
    }
    throw VerificationError("no codeword found by support enumeration");
}

} // namespace

uint64_t column_distance_exact(const PolyMatrix& g, unsigned j, DistanceEngine engine) {
    if (g.coeff_block(0).rank() != g.rows())
        throw std::invalid_argument("G_0 must have full row rank");
    size_t R = g.rows() * (j + 1);
    uint64_t messages = checked_pow(g.field()->order(), R, kEnumGuard);
    uint64_t bound_w = static_cast<uint64_t>(g.cols() - g.rows()) * (j + 1) + 1;
    uint64_t subsets = subset_budget(g.cols() * (j + 1), bound_w - 1, kEnumGuard);

    switch (engine) {
        case DistanceEngine::MessageEnum:
            if (messages == 0)
                throw InfeasibleError("message enumeration exceeds guard of 10^7 states");
            return column_distance_messages(g, j);
        case DistanceEngine::SupportEnum:
            return column_distance_supports(g, j, kEnumGuard);
        case DistanceEngine::Auto:
            if (messages != 0) return column_distance_messages(g, j);
            if (subsets <= kEnumGuard) return column_distance_supports(g, j, kEnumGuard);
            throw InfeasibleError("column distance enumeration infeasible for both engines");
    }
    throw std::invalid_argument("unknown engine");
}

FreeDistanceScan free_distance_upper(const PolyMatrix& g, unsigned max_deg) {
    const FieldPtr& F = g.field();
    size_t k = g.rows(), n = g.cols();
    size_t R = k * (max_deg + 1);
    if (checked_pow(F->order(), R, kEnumGuard) == 0)
        throw InfeasibleError("free distance scan exceeds guard of 10^7 states");

    unsigned m = g.memory();
    std::vector<FieldMatrix> blocks;
    for (unsigned i = 0; i <= m; ++i) blocks.push_back(g.coeff_block(i));

    std::vector<uint64_t> digits(R, 0);
    std::vector<FieldElement> u(R, F->zero());
    FreeDistanceScan scan;
    scan.max_deg = max_deg;
    scan.upper_bound = UINT64_MAX;
    while (advance_message(digits, u, F)) {
        unsigned u_deg = 0;
        for (unsigned b = 0; b <= max_deg; ++b) {
            for (size_t i = 0; i < k; ++i)
                if (digits[b * k + i] != 0) u_deg = b;
        }
        uint64_t w = 0;
        for (unsigned b = 0; b <= max_deg + m; ++b) {
            std::vector<FieldElement> vb(n, F->zero());
            for (unsigned i = 0; i <= max_deg; ++i) {
                if (b < i || b - i > m) continue;
                const FieldMatrix& blk = blocks[b - i];
                for (size_t r = 0; r < k; ++r) {
                    const FieldElement& ue = u[i * k + r];
                    if (ue.is_zero()) continue;
                    for (size_t c = 0; c < n; ++c) vb[c] = vb[c] + ue * blk.at(r, c);
                }
            }
            w += hamming_weight(vb);
        }
        if (w < scan.upper_bound || (w == scan.upper_bound && u_deg < scan.achieving_degree)) {
            scan.upper_bound = w;
            scan.achieving_degree = u_deg;
        }
    }
    return scan;
}

void for_each_column_subset(size_t n_cols, size_t size,
                            const std::function<bool(std::span<const size_t>)>& visit) {
    if (size > n_cols) return;
    std::vector<size_t> c(size);
    for (size_t i = 0; i < size; ++i) c[i] = i;
    for (;;) {
        if (!visit(c)) return;
        // next combination in lex order
        size_t i = size;
        while (i > 0) {
            --i;
            if (c[i] + (size - i) < n_cols) {
                ++c[i];
                for (size_t j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (size == 0) return;
    }
}

bool qualifying_columns(const TruncatedMatrix& t, std::span<const size_t> cols) {
    size_t n = t.n;
    if (t.kind == TruncKind::Generator) {
        size_t k = t.block_rows;
        for (unsigned s = 1; s <= t.j; ++s) {
            size_t pos = k * s; // 0-based position of t_{ks+1}
            if (pos < cols.size() && cols[pos] < n * s) return false;
        }
    } else {
        size_t k = n - t.block_rows;
        for (unsigned s = 1; s <= t.j; ++s) {
            size_t pos = k * s; // 1-based t_{ks}
            // a set too small to have a t_{ks} cannot satisfy the condition;
            // with k > block size nothing qualifies and the check is vacuous
            if (pos > cols.size()) return false;
            if (cols[pos - 1] > n * s - 1) return false;
        }
    }
    return true;
}

FieldElement truncated_minor(const TruncatedMatrix& t, std::span<const size_t> cols) {
    if (cols.size() != t.mat.rows())
        throw std::invalid_argument("minor must use exactly block_rows*(j+1) columns");
    return t.mat.select_columns(cols).det();
}

MinorCheckReport mdp_minor_check(const TruncatedMatrix& t, uint64_t subset_guard) {
    size_t z = t.mat.rows();
    size_t N = t.mat.cols();
    if (binom_capped(N, z, subset_guard) > subset_guard)
        throw InfeasibleError("minor enumeration exceeds guard");

    MinorCheckReport rep;
    rep.ok = true;
    uint64_t examined = 0;
    for_each_column_subset(N, z, [&](std::span<const size_t> cols) {
        if (++examined > subset_guard) throw InfeasibleError("minor enumeration exceeds guard");
        if (!qualifying_columns(t, cols)) return true;
        ++rep.minors_checked;
        if (truncated_minor(t, cols).is_zero()) {
            rep.ok = false;
            rep.witness_columns.assign(cols.begin(), cols.end());
            for (auto& c : rep.witness_columns) ++c; // report 1-based
            return false;
        }
        return true;
    });
    return rep;
}

MdpReport is_mdp(const PolyMatrix& g) {
    DegreeStats s = degree_stats(g);
    if (!is_minimal(g)) throw std::invalid_argument("generator matrix is not minimal");
    if (!s.generic) throw std::invalid_argument("row degrees are not generic");
    SingletonData sd = singleton_data(static_cast<unsigned>(g.cols()),
                                      static_cast<unsigned>(g.rows()), s.overall);
    MdpReport rep;
    rep.L = sd.L;
    rep.delta = s.overall;
    rep.minors = mdp_minor_check(truncate(g, sd.L, TruncKind::Generator));
    rep.is_mdp = rep.minors.ok;
    return rep;
}

DistanceProfile distance_profile(const PolyMatrix& g, unsigned jmax,
                                 std::optional<unsigned> free_max_deg, DistanceEngine engine) {
    DegreeStats s = degree_stats(g);
    SingletonData sd = singleton_data(static_cast<unsigned>(g.cols()),
                                      static_cast<unsigned>(g.rows()), s.overall);
    DistanceProfile p;
    p.n = sd.n;
    p.k = sd.k;
    p.delta = sd.delta;
    p.L = sd.L;
    p.M = sd.M;
    for (unsigned j = 0; j <= jmax; ++j) {
        ProfileRow row;
        row.j = j;
        row.d = column_distance_exact(g, j, engine);
        row.bound = sd.column_bound(j);
        row.met = row.d == row.bound;
        p.rows.push_back(row);
        if (j == p.L) p.mdp = row.met;
        if (j == p.M) p.strongly_mds = row.d == sd.free_distance_bound;
    }
    if (free_max_deg) p.free_scan = free_distance_upper(g, *free_max_deg);
    return p;
}

std::string profile_csv(const DistanceProfile& p) {
    std::ostringstream os;
    os << "j,d_j_c,bound,met\n";
    for (const auto& r : p.rows)
        os << r.j << "," << r.d << "," << r.bound << "," << (r.met ? "yes" : "no") << "\n";
    if (p.free_scan) {
        SingletonData sd = singleton_data(p.n, p.k, p.delta);
        os << "# free_distance_upper=" << p.free_scan->upper_bound
           << " max_deg=" << p.free_scan->max_deg
           << " achieving_degree=" << p.free_scan->achieving_degree
           << " singleton_bound=" << sd.free_distance_bound << "\n";
    } else {
        os << "# free_distance_upper not computed\n";
    }
    return os.str();
}

} // namespace skewconv
