#include <doctest.h>

#include "skewconv/linalg.hpp"

using namespace skewconv;

namespace {

FieldPtr f9() {
    static FieldPtr f = ExtensionField::make(3, 2);
    return f;
}

FieldElement el(int64_t c0, int64_t c1) {
    return f9()->from_coords(std::vector<int64_t>{c0, c1});
}

// rows given as flat (c0, c1) pairs
FieldMatrix mat(size_t rows, size_t cols, std::initializer_list<int64_t> flat) {
    REQUIRE(flat.size() == rows * cols * 2);
    FieldMatrix m(f9(), rows, cols);
    auto it = flat.begin();
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            int64_t a = *it++;
            int64_t b = *it++;
            m.at(r, c) = el(a, b);
        }
    return m;
}

} // namespace

TEST_CASE("rank and determinant on frozen examples") {
    // [[1, w], [2, 2w]]: second row = 2 * first, so rank 1, det 0
    auto m = mat(2, 2, {1, 0, 0, 1, 2, 0, 0, 2});
    CHECK(m.rank() == 1);
    CHECK(m.det().is_zero());
    CHECK_FALSE(m.is_zero());

    // [[1, 1], [1, 2]]: det = 2 - 1 = 1
    auto v = mat(2, 2, {1, 0, 1, 0, 1, 0, 2, 0});
    CHECK(v.rank() == 2);
    CHECK(v.det() == el(1, 0));

    // [[1, 1+w], [1+2w, w]] det = w - (1+w)(1+2w) = w - (1+2w+w+2w^2)
    //   = w - (1 + 3w + 2*2) = w - (1+1)*... hand value: (1+w)(1+2w) = 1+2w+w+2w^2
    //   w^2 = -1 so 2w^2 = 1; total = 2 + 3w = 2. det = w - 2 = 1 + w.
    auto d = mat(2, 2, {1, 0, 1, 1, 1, 2, 0, 1});
    CHECK(d.det() == el(1, 1));

    CHECK(FieldMatrix(f9(), 2, 3).is_zero());
    CHECK(FieldMatrix(f9(), 2, 3).rank() == 0);
    CHECK_THROWS(mat(1, 2, {1, 0, 0, 0}).det()); // non-square
}

TEST_CASE("determinant is multiplicative and detects singularity (exhaustive 2x2 spot run)") {
    auto a = mat(2, 2, {1, 1, 2, 0, 0, 1, 1, 2});
    auto b = mat(2, 2, {2, 2, 1, 0, 0, 0, 1, 1});
    CHECK(matmul(a, b).det() == a.det() * b.det());
}

TEST_CASE("matmul against identity and associativity") {
    auto id = mat(2, 2, {1, 0, 0, 0, 0, 0, 1, 0});
    auto a = mat(2, 3, {1, 1, 0, 2, 2, 0, 1, 0, 0, 1, 1, 1});
    CHECK(matmul(id, a) == a);
    auto b = mat(3, 2, {1, 0, 0, 1, 2, 1, 1, 1, 0, 0, 2, 2});
    auto c = mat(2, 2, {0, 1, 1, 0, 2, 0, 0, 2});
    CHECK(matmul(matmul(a, b), c) == matmul(a, matmul(b, c)));
    CHECK_THROWS(matmul(a, c)); // 3 != 2 inner dim
}

TEST_CASE("select_columns, drop_rows_before, transpose") {
    auto a = mat(2, 3, {1, 0, 2, 0, 0, 1, 0, 0, 1, 1, 2, 2});
    std::vector<size_t> pick = {2, 0};
    auto s = a.select_columns(pick);
    CHECK(s.cols() == 2);
    CHECK(s.at(0, 0) == el(0, 1));
    CHECK(s.at(0, 1) == el(1, 0));
    CHECK(s.at(1, 0) == el(2, 2));

    auto d = a.drop_rows_before(1);
    CHECK(d.rows() == 1);
    CHECK(d.at(0, 2) == el(2, 2));
    CHECK(a.drop_rows_before(0) == a);

    auto t = a.transpose();
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 2);
    CHECK(t.at(2, 1) == el(2, 2));
    CHECK(t.transpose() == a);
}

TEST_CASE("row_times_matrix and hamming weight") {
    auto a = mat(2, 3, {1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 2, 0});
    std::vector<FieldElement> u = {el(1, 0), el(1, 0)};
    auto v = row_times_matrix(u, a);
    REQUIRE(v.size() == 3);
    CHECK(v[0] == el(1, 0));
    CHECK(v[1] == el(2, 0));
    CHECK(v[2] == el(0, 0));
    CHECK(hamming_weight(v) == 2);
    std::vector<FieldElement> z = {el(0, 0), el(0, 0)};
    CHECK(hamming_weight(row_times_matrix(z, a)) == 0);
}

TEST_CASE("solve_left covers all three outcomes") {
    // full-rank square system: u * V = rhs has a unique solution
    auto v = mat(2, 2, {1, 0, 1, 0, 1, 0, 2, 0});
    std::vector<FieldElement> rhs = {el(0, 1), el(1, 2)};
    auto res = solve_left(v, rhs);
    REQUIRE(res.status == SolveStatus::Unique);
    CHECK(row_times_matrix(res.solution, v) == rhs);

    // inconsistent: rows of m are equal but rhs entries differ
    auto m = mat(2, 2, {1, 0, 2, 0, 1, 0, 2, 0});
    std::vector<FieldElement> bad = {el(1, 0), el(0, 0)};
    CHECK(solve_left(m, bad).status == SolveStatus::Inconsistent);

    // underdetermined: the zero rhs on a rank-1 2-row system
    std::vector<FieldElement> zero = {el(0, 0), el(0, 0)};
    CHECK(solve_left(m, zero).status == SolveStatus::Underdetermined);

    // wide full-row-rank systems stay unique
    auto w = mat(2, 3, {1, 0, 0, 0, 1, 1, 0, 0, 1, 0, 2, 1});
    std::vector<FieldElement> r3 = {el(1, 0), el(2, 0), el(0, 2)};
    auto uw = solve_left(w, r3);
    if (uw.status == SolveStatus::Unique)
        CHECK(row_times_matrix(uw.solution, w) == r3);
}

TEST_CASE("solve_left solution reproduces a known encoding") {
    auto g = mat(2, 4, {1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 2, 0, 0, 1});
    std::vector<FieldElement> u = {el(2, 1), el(1, 2)};
    auto rhs = row_times_matrix(u, g);
    auto res = solve_left(g, rhs);
    REQUIRE(res.status == SolveStatus::Unique);
    CHECK(res.solution == u);
}

TEST_CASE("rank over the base field") {
    CHECK(rank_mod_q({{1, 2}, {2, 4}}, 3) == 1); // second row = 2 * first mod 3
    CHECK(rank_mod_q({{1, 2}, {2, 1}}, 3) == 1); // det = -3 = 0 mod 3
    CHECK(rank_mod_q({{1, 2}, {0, 1}}, 3) == 2);
    CHECK(rank_mod_q({{0, 0}, {0, 0}}, 3) == 0);
    CHECK(rank_mod_q({{1, 0, 4}, {0, 1, 1}, {1, 1, 5}}, 5) == 2);
    CHECK(rank_mod_q({{6, 3}, {4, 9}}, 3) == 1); // reduces to [[0,0],[1,0]]
}
