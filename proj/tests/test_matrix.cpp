#include "recipalg/matrix.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace recipalg;
using testsupport::naiveRank;
using testsupport::randomMatrix;
using testsupport::randomRational;

namespace {

Matrix fromInts(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Rational>> conv;
    for (const auto& r : rows) {
        std::vector<Rational> row(r.begin(), r.end());
        conv.push_back(std::move(row));
    }
    return Matrix::fromRows(conv);
}

} // namespace

TEST_CASE("rank of simple matrices", "[matrix]") {
    CHECK(rank(fromInts({{1, 0}, {0, 1}})) == 2);
    CHECK(rank(fromInts({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})) == 0);
    // row1 - row2 = row3
    CHECK(rank(fromInts({{1, 1, 0}, {0, 1, 1}, {1, 0, -1}})) == 2);
    CHECK(rank(Matrix(0, 0)) == 0);
    CHECK(rank(Matrix(3, 0)) == 0);
}

TEST_CASE("rank equals rank of the transpose", "[matrix]") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 60; ++it) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        const Matrix m = randomMatrix(rng, dim(rng), dim(rng));
        CHECK(rank(m) == rank(transpose(m)));
    }
}

TEST_CASE("rank is invariant under row scaling and permutation", "[matrix]") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 40; ++it) {
        std::uniform_int_distribution<std::size_t> dim(2, 5);
        Matrix m = randomMatrix(rng, dim(rng), dim(rng));
        const std::size_t before = rank(m);

        std::uniform_int_distribution<std::size_t> rowPick(0, m.rows() - 1);
        Rational scale = randomRational(rng);
        if (scale == 0)
            scale = Rational(5, 3);
        const std::size_t r = rowPick(rng);
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(r, j) *= scale;
        m.swapRows(0, m.rows() - 1);
        CHECK(rank(m) == before);
    }
}

TEST_CASE("fraction-free rank agrees with naive rational elimination", "[matrix]") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 120; ++it) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        Matrix m = randomMatrix(rng, dim(rng), dim(rng));
        // plant a dependent row now and then to exercise rank deficiency
        if (m.rows() >= 2 && it % 3 == 0) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(m.rows() - 1, j) = m(0, j) * Rational(2) - m(1 % m.rows(), j);
        }
        CHECK(rank(m) == naiveRank(m));
    }
}

TEST_CASE("solve on the identity", "[matrix]") {
    const auto sol = solve(fromInts({{1, 0}, {0, 1}}), {Rational(3), Rational(5)});
    REQUIRE(sol.has_value());
    CHECK(sol->particular == std::vector<Rational>{Rational(3), Rational(5)});
}

TEST_CASE("underdetermined system reports a nullspace", "[matrix]") {
    const auto sol = solve(fromInts({{2, 4}}), {Rational(6)}, /*wantNullspace=*/true);
    REQUIRE(sol.has_value());
    CHECK(Rational(2) * sol->particular[0] + Rational(4) * sol->particular[1] == Rational(6));
    REQUIRE(sol->nullspace.size() == 1);
    const auto& v = sol->nullspace[0];
    CHECK(Rational(2) * v[0] + Rational(4) * v[1] == Rational(0));
}

TEST_CASE("inconsistent system has no solution", "[matrix]") {
    CHECK_FALSE(solve(fromInts({{1, 0}, {1, 0}}), {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("solve rejects mismatched right-hand sides", "[matrix]") {
    CHECK_THROWS_AS(solve(fromInts({{1, 0}}), {Rational(1), Rational(2)}), std::invalid_argument);
}

TEST_CASE("solutions and nullspace vectors satisfy the system exactly", "[matrix]") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 60; ++it) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        const std::size_t rows = dim(rng), cols = dim(rng);
        const Matrix m = randomMatrix(rng, rows, cols);
        std::vector<Rational> x(cols);
        for (auto& v : x)
            v = randomRational(rng);
        std::vector<Rational> rhs(rows, Rational(0));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                rhs[i] += m(i, j) * x[j];

        const auto sol = solve(m, rhs, /*wantNullspace=*/true);
        REQUIRE(sol.has_value()); // consistent by construction
        for (std::size_t i = 0; i < rows; ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < cols; ++j)
                acc += m(i, j) * sol->particular[j];
            CHECK(acc == rhs[i]);
        }
        CHECK(sol->nullspace.size() == cols - rank(m));
        for (const auto& v : sol->nullspace)
            for (std::size_t i = 0; i < rows; ++i) {
                Rational acc(0);
                for (std::size_t j = 0; j < cols; ++j)
                    acc += m(i, j) * v[j];
                CHECK(acc == 0);
            }
    }
}
