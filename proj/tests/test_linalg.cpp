#include <odesym/linalg.hpp>

#include <doctest.h>

#include "testutil.hpp"

using namespace odesym;
using testutil::Rng;

namespace {

RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

std::vector<Rat> vec(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
    CHECK(rank(identity(3)) == 3);
    CHECK(rank(RatMatrix(4, 5)) == 0);
    CHECK(rank(RatMatrix::from_rows({vec({1, 2}), vec({2, 4})})) == 1);
}

TEST_CASE("nullspace canonical bases") {
    CHECK(nullspace(identity(4)).empty());

    const auto n1 = nullspace(RatMatrix::from_rows({vec({1, -1})}));
    REQUIRE(n1.size() == 1);
    CHECK(n1[0] == vec({1, 1}));

    const auto n2 = nullspace(RatMatrix(2, 3));
    REQUIRE(n2.size() == 3);
    CHECK(n2[0] == vec({1, 0, 0}));
    CHECK(n2[1] == vec({0, 1, 0}));
    CHECK(n2[2] == vec({0, 0, 1}));
}

TEST_CASE("span comparison") {
    CHECK(span_equal({vec({1, 0}), vec({0, 1})}, {vec({1, 1}), vec({1, -1})}));
    CHECK(!span_equal({vec({1, 0})}, {vec({0, 1})}));
    CHECK(span_equal({}, {}));
    CHECK_THROWS_AS(span_equal({vec({1, 0})}, {vec({1, 0, 0})}), std::invalid_argument);
}

TEST_CASE("exact solve") {
    const RatMatrix a = RatMatrix::from_rows({vec({1, 2}), vec({3, 4}), vec({4, 6})});
    const auto sol = solve_exact(a, vec({5, 11, 16}));
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rat(1));
    CHECK((*sol)[1] == Rat(2));

    CHECK(!solve_exact(a, vec({5, 11, 17})).has_value());
}

TEST_CASE("random matrices: nullspace vectors annihilate, rank plus nullity is column count") {
    Rng rng(112358);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 5;
        const std::size_t cols = 1 + rng() % 6;
        RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                // Skew toward rank-deficient matrices.
                m.at(i, j) = (rng() % 3 == 0) ? Rat(0) : testutil::random_rat(rng, 5, 3);

        const std::size_t r = rank(m);
        const auto ns = nullspace(m);
        CHECK(r + ns.size() == cols);
        for (const auto& v : ns) {
            for (std::size_t i = 0; i < rows; ++i) {
                Rat dot(0);
                for (std::size_t j = 0; j < cols; ++j) dot += m.at(i, j) * v[j];
                CHECK(dot == Rat(0));
            }
        }

        // The RREF must reproduce the same rank.
        const RatMatrix e = rref(m);
        std::size_t lead = 0;
        for (std::size_t i = 0; i < e.rows(); ++i) {
            bool nonzero = false;
            for (std::size_t j = 0; j < e.cols(); ++j) nonzero = nonzero || !e.at(i, j).is_zero();
            if (nonzero) ++lead;
        }
        CHECK(lead == r);
    }
}

TEST_CASE("random spans: scaling and row operations preserve the span") {
    Rng rng(13579);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 2 + rng() % 4;
        std::vector<std::vector<Rat>> a;
        const std::size_t count = 1 + rng() % 3;
        for (std::size_t k = 0; k < count; ++k) {
            std::vector<Rat> v(dim);
            for (auto& x : v) x = testutil::random_rat(rng, 4, 2);
            a.push_back(std::move(v));
        }
        // b: nonzero multiples plus a linear combination
        std::vector<std::vector<Rat>> b;
        for (const auto& v : a) {
            const Rat s = testutil::random_nonzero_rat(rng, 4, 2);
            std::vector<Rat> w(dim);
            for (std::size_t j = 0; j < dim; ++j) w[j] = s * v[j];
            b.push_back(std::move(w));
        }
        std::vector<Rat> combo(dim, Rat(0));
        for (const auto& v : a)
            for (std::size_t j = 0; j < dim; ++j) combo[j] += v[j];
        b.push_back(std::move(combo));
        CHECK(span_equal(a, b));
    }
}
