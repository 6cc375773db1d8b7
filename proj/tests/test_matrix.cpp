#include <doctest.h>

#include <random>

#include "ncbgg/matrix.hpp"

using namespace ncbgg;

namespace {

template <class F>
Mat<F> from_ints(F f, std::size_t r, std::size_t c, std::initializer_list<long long> vals) {
    Mat<F> m(f, r, c);
    auto it = vals.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_int(*it++);
    return m;
}

template <class F>
Mat<F> random_matrix(F f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Mat<F> m(f, r, c);
    for (auto& v : m.a) v = f.random(rng);
    return m;
}

} // namespace

TEST_CASE("prime field arithmetic") {
    PrimeField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.from_int(-1) == 6);
    CHECK_THROWS_AS(PrimeField(6), precondition_error);
    CHECK_THROWS_AS(PrimeField(1), precondition_error);
    PrimeField big(2147483647); // 2^31 - 1 is prime
    CHECK(big.mul(big.modulus() - 1, big.modulus() - 1) == 1);
    CHECK_THROWS_AS(PrimeField(2147483648ULL), precondition_error);
}

TEST_CASE("rationals stay canonical") {
    Rationals q;
    auto x = q.div(q.from_int(6), q.from_int(-4));
    CHECK(q.to_string(x) == "-3/2");
    CHECK(q.eq(q.add(x, x), q.from_int(-3)));
}

TEST_CASE("rank_and_rref examples") {
    PrimeField f5(5);
    auto id2 = Mat<PrimeField>::identity(f5, 2);
    auto r = rank_and_rref(id2);
    CHECK(r.rank == 2);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});

    Mat<PrimeField> z(f5, 3, 4);
    auto rz = rank_and_rref(z);
    CHECK(rz.rank == 0);
    CHECK(rz.pivot_columns.empty());

    // [[1,2],[2,4]] over Q eliminates to a single row [1,2]
    Rationals q;
    auto m = from_ints(q, 2, 2, {1, 2, 2, 4});
    auto rq = rank_and_rref(m);
    CHECK(rq.rank == 1);
    CHECK(rq.pivot_columns == std::vector<std::size_t>{0});
    CHECK(rq.rref == from_ints(q, 1, 2, {1, 2}));
}

TEST_CASE("kernel_basis examples") {
    PrimeField f7(7);
    auto id3 = Mat<PrimeField>::identity(f7, 3);
    CHECK(kernel_basis(id3).rows == 0);

    Mat<PrimeField> z(f7, 2, 3);
    CHECK(kernel_basis(z).rows == 3);

    auto m = from_ints(f7, 1, 3, {1, 1, 0});
    auto ker = kernel_basis(m);
    CHECK(ker.rows == 2);
    for (std::size_t i = 0; i < ker.rows; ++i) {
        auto s = f7.zero();
        for (std::size_t j = 0; j < 3; ++j) s = f7.add(s, f7.mul(m.at(0, j), ker.at(i, j)));
        CHECK(s == 0);
    }
}

TEST_CASE("quotient_basis examples") {
    Rationals q;
    auto empty = Mat<Rationals>(q, 0, 3);
    auto qt = quotient_basis(empty, 3);
    CHECK(qt.dim() == 3);
    CHECK(qt.projection == Mat<Rationals>::identity(q, 3));

    auto full = Mat<Rationals>::identity(q, 2);
    CHECK(quotient_basis(full, 2).dim() == 0);

    auto line = from_ints(q, 1, 2, {1, 1});
    auto q2 = quotient_basis(line, 2);
    CHECK(q2.dim() == 1);

    auto bad = from_ints(q, 1, 3, {1, 0, 0});
    CHECK_THROWS_AS(quotient_basis(bad, 2), precondition_error);
}

TEST_CASE("rank-nullity, rref idempotence, projection/section identity") {
    PrimeField f(13);
    Rationals q;
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> dim(0, 7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        auto m = random_matrix(f, r, c, rng);
        auto rr = rank_and_rref(m);
        CHECK(rr.rank + kernel_basis(m).rows == c);
        auto again = rank_and_rref(rr.rref);
        CHECK(again.rref == rr.rref);
        if (c > 0) {
            auto qt = quotient_basis(m, c);
            CHECK(qt.dim() == c - rr.rank);
            auto comp = mat_mul(qt.projection, qt.section.transpose());
            CHECK(comp == Mat<PrimeField>::identity(f, qt.dim()));
            // kernel of the projection is the row span
            auto proj = mat_mul(m, qt.projection.transpose());
            CHECK(proj.is_zero());
        }
    }
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        auto m = random_matrix(q, r, c, rng);
        auto rr = rank_and_rref(m);
        CHECK(rr.rank + kernel_basis(m).rows == c);
    }
}

TEST_CASE("coords_in_basis recovers coefficients") {
    PrimeField f(11);
    auto basis = from_ints(f, 2, 3, {1, 2, 3, 0, 1, 4});
    auto v = from_ints(f, 1, 3, {2, 5, 10}); // 2*row0 + 1*row1
    auto c = coords_in_basis(basis, v);
    CHECK(c == from_ints(f, 1, 2, {2, 1}));
    auto outside = from_ints(f, 1, 3, {0, 0, 1});
    CHECK_THROWS_AS(coords_in_basis(basis, outside), precondition_error);
}
