#pragma once

#include <optional>
#include <span>
#include <vector>

#include "skewconv/gf.hpp"

namespace skewconv {

/// Dense matrix over F_{q^t}. All decompositions are exact Gaussian
/// elimination; there is no floating point anywhere.
class FieldMatrix {
  public:
    FieldMatrix() = default;
    FieldMatrix(FieldPtr field, size_t rows, size_t cols); // zero-filled

    static FieldMatrix from_rows(const FieldPtr& field,
                                 const std::vector<std::vector<FieldElement>>& rows);

    const FieldPtr& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElement& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const FieldElement& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    FieldMatrix select_columns(std::span<const size_t> cols) const;
    FieldMatrix drop_rows_before(size_t first_row) const; // rows [first_row, rows)
    FieldMatrix transpose() const;

    bool is_zero() const;
    size_t rank() const;
    FieldElement det() const; // square matrices only

    bool operator==(const FieldMatrix& o) const;

  private:
    FieldPtr field_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> a_;
};

/// u * M for a row vector u of length M.rows().
std::vector<FieldElement> row_times_matrix(std::span<const FieldElement> u, const FieldMatrix& m);

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b);

size_t hamming_weight(std::span<const FieldElement> v);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct LeftSolveResult {
    SolveStatus status;
    std::vector<FieldElement> solution; // valid only when status == Unique
};

/// Solves u * M = rhs for the row vector u (length M.rows()).
LeftSolveResult solve_left(const FieldMatrix& m, std::span<const FieldElement> rhs);

/// Rank of an integer matrix over F_q (entries reduced mod q).
size_t rank_mod_q(std::vector<std::vector<uint32_t>> m, uint64_t q);

} // namespace skewconv
