#include "skewconv/linalg.hpp"

#include <stdexcept>

namespace skewconv {

FieldMatrix::FieldMatrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (!field_) throw std::invalid_argument("matrix needs a field");
    a_.assign(rows_ * cols_, field_->zero());
}

FieldMatrix FieldMatrix::from_rows(const FieldPtr& field,
                                   const std::vector<std::vector<FieldElement>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    FieldMatrix m(field, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (size_t j = 0; j < c; ++j) {
            if (!rows[i][j].field() || !rows[i][j].field()->same(*field))
                throw std::invalid_argument("mixed-field operands");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

FieldMatrix FieldMatrix::select_columns(std::span<const size_t> cols) const {
    FieldMatrix m(field_, rows_, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw std::invalid_argument("column index out of range");
        for (size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, cols[j]);
    }
    return m;
}

FieldMatrix FieldMatrix::drop_rows_before(size_t first_row) const {
    if (first_row > rows_) throw std::invalid_argument("row index out of range");
    FieldMatrix m(field_, rows_ - first_row, cols_);
    for (size_t i = first_row; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i - first_row, j) = at(i, j);
    return m;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix m(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool FieldMatrix::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

size_t FieldMatrix::rank() const {
    FieldMatrix m = *this;
    size_t rank = 0;
    for (size_t col = 0; col < m.cols_ && rank < m.rows_; ++col) {
        size_t pivot = rank;
        while (pivot < m.rows_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows_) continue;
        for (size_t j = col; j < m.cols_; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        FieldElement pinv = m.at(rank, col).inv();
        for (size_t i = rank + 1; i < m.rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            FieldElement f = m.at(i, col) * pinv;
            for (size_t j = col; j < m.cols_; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

FieldElement FieldMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    if (rows_ == 0) return field_->one();
    FieldMatrix m = *this;
    FieldElement d = field_->one();
    for (size_t col = 0; col < m.cols_; ++col) {
        size_t pivot = col;
        while (pivot < m.rows_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows_) return field_->zero();
        if (pivot != col) {
            for (size_t j = col; j < m.cols_; ++j) std::swap(m.at(col, j), m.at(pivot, j));
            d = -d;
        }
        d = d * m.at(col, col);
        FieldElement pinv = m.at(col, col).inv();
        for (size_t i = col + 1; i < m.rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            FieldElement f = m.at(i, col) * pinv;
            for (size_t j = col; j < m.cols_; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return d;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::vector<FieldElement> row_times_matrix(std::span<const FieldElement> u, const FieldMatrix& m) {
    if (u.size() != m.rows()) throw std::invalid_argument("row vector length mismatch");
    std::vector<FieldElement> v(m.cols(), m.field()->zero());
    for (size_t i = 0; i < m.rows(); ++i) {
        if (u[i].is_zero()) continue;
        for (size_t j = 0; j < m.cols(); ++j) v[j] = v[j] + u[i] * m.at(i, j);
    }
    return v;
}

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
    FieldMatrix m(a.field(), a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j)
                m.at(i, j) = m.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return m;
}

size_t hamming_weight(std::span<const FieldElement> v) {
    size_t w = 0;
    for (const auto& e : v)
        if (!e.is_zero()) ++w;
    return w;
}

LeftSolveResult solve_left(const FieldMatrix& m, std::span<const FieldElement> rhs) {
    if (rhs.size() != m.cols()) throw std::invalid_argument("rhs length mismatch");
    // u * M = rhs  <=>  M^T u^T = rhs^T; eliminate on the augmented transpose.
    size_t n = m.rows();     // unknowns
    size_t eqs = m.cols();   // equations
    FieldMatrix aug(m.field(), eqs, n + 1);
    for (size_t i = 0; i < eqs; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(j, i);
        aug.at(i, n) = rhs[i];
    }
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < eqs; ++col) {
        size_t p = row;
        while (p < eqs && aug.at(p, col).is_zero()) ++p;
        if (p == eqs) continue;
        for (size_t j = col; j <= n; ++j) std::swap(aug.at(row, j), aug.at(p, j));
        FieldElement pinv = aug.at(row, col).inv();
        for (size_t j = col; j <= n; ++j) aug.at(row, j) = aug.at(row, j) * pinv;
        for (size_t i = 0; i < eqs; ++i) {
            if (i == row || aug.at(i, col).is_zero()) continue;
            FieldElement f = aug.at(i, col);
            for (size_t j = col; j <= n; ++j)
                aug.at(i, j) = aug.at(i, j) - f * aug.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < eqs; ++i) {
        if (!aug.at(i, n).is_zero()) return {SolveStatus::Inconsistent, {}};
    }
    if (pivot_col.size() < n) return {SolveStatus::Underdetermined, {}};
    std::vector<FieldElement> u(n, m.field()->zero());
    for (size_t i = 0; i < pivot_col.size(); ++i) u[pivot_col[i]] = aug.at(i, n);
    return {SolveStatus::Unique, std::move(u)};
}

size_t rank_mod_q(std::vector<std::vector<uint32_t>> m, uint64_t q) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    auto inv = [q](uint64_t a) {
        uint64_t r = 1, b = a % q, e = q - 2; // q prime
        while (e) {
            if (e & 1) r = r * b % q;
            b = b * b % q;
            e >>= 1;
        }
        return r;
    };
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col] % q == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        uint64_t pinv = inv(m[rank][col]);
        for (size_t i = rank + 1; i < rows; ++i) {
            uint64_t f = m[i][col] % q * pinv % q;
            if (f == 0) continue;
            for (size_t j = col; j < cols; ++j)
                m[i][j] = static_cast<uint32_t>((m[i][j] + (q - f) * m[rank][j]) % q);
        }
        ++rank;
    }
    return rank;
}

} // namespace skewconv
