#include <doctest.h>

#include <random>

#include "ktheta/exact_linalg.hpp"

using namespace ktheta;

namespace {

SparseIntMatrix dense(const std::vector<std::vector<long>>& rows) {
    SparseIntMatrix m;
    m.rows = static_cast<long>(rows.size());
    m.cols = rows.empty() ? 0 : static_cast<long>(rows[0].size());
    for (long r = 0; r < m.rows; ++r) {
        for (long c = 0; c < m.cols; ++c) {
            if (rows[r][c]) m.add(r, c, rows[r][c]);
        }
    }
    return m;
}

} // namespace

TEST_CASE("rank of simple matrices") {
    CHECK(rank_bareiss(dense({{1, 0}, {0, 1}})) == 2);
    CHECK(rank_bareiss(dense({{1, 2}, {2, 4}})) == 1);
    CHECK(rank_bareiss(dense({{0, 0}, {0, 0}})) == 0);
    CHECK(rank_bareiss(dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
    CHECK(rank_bareiss(SparseIntMatrix{}) == 0);
    // Rectangular, with duplicate accumulation.
    SparseIntMatrix m;
    m.rows = 2;
    m.cols = 3;
    m.add(0, 0, 2);
    m.add(0, 0, -2); // cancels to zero
    m.add(1, 2, 5);
    CHECK(rank_bareiss(m) == 1);
    CHECK(rank_modp(m) == 1);
}

TEST_CASE("bareiss and mod-p agree on random dense matrices") {
    std::mt19937 gen(20240817);
    std::uniform_int_distribution<int> val(-6, 6);
    for (int trial = 0; trial < 25; ++trial) {
        const long rows = 4 + trial % 9;
        const long cols = 4 + (trial * 7) % 9;
        SparseIntMatrix m;
        m.rows = rows;
        m.cols = cols;
        for (long r = 0; r < rows; ++r) {
            for (long c = 0; c < cols; ++c) {
                const long v = val(gen);
                if (v) m.add(r, c, v);
            }
        }
        CHECK(rank_bareiss(m) == rank_modp(m));
        CHECK(rank_hybrid(m) == rank_bareiss(m));
        CHECK(rank_hybrid(m, true) == rank_bareiss(m));
    }
}

TEST_CASE("bareiss handles rank-deficient products exactly") {
    // A = B * C with B 20x3, C 3x20: rank exactly 3, while intermediate
    // minors are far beyond 64 bits if computed naively at this density.
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> val(-9, 9);
    std::vector<std::vector<long>> b(20, std::vector<long>(3));
    std::vector<std::vector<long>> c(3, std::vector<long>(20));
    for (auto& row : b)
        for (auto& x : row) x = val(gen);
    for (auto& row : c)
        for (auto& x : row) x = val(gen);
    std::vector<std::vector<long>> a(20, std::vector<long>(20, 0));
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j)
            for (int k = 0; k < 3; ++k) a[i][j] += b[i][k] * c[k][j];
    CHECK(rank_bareiss(dense(a)) == 3);
    CHECK(rank_modp(dense(a)) == 3);
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(19, 8) == 75582);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
}
