#include "doctest.h"
#include "monad/mat.hpp"

using namespace monad;

namespace {

template <class K>
void kernel_props(const K& k, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < 20; ++t) {
        std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6), s = 1 + rng.below(4);
        /* rank at most s by construction */
        auto m = random_mat(k, r, s, rng) * random_mat(k, s, c, rng);
        auto rk = rank(m);
        CHECK(rk <= std::min({r, c, s}));
        auto ker = kernel_basis(m);
        CHECK(ker.cols() + rk == c);
        CHECK((m * ker).is_zero());
        CHECK(rank(ker) == ker.cols());
        auto lk = left_kernel_basis(m);
        CHECK(lk.rows() + rk == r);
        CHECK((lk * m).is_zero());
        CHECK(column_basis(m).cols() == rk);
        CHECK(rank(m.transpose()) == rk);
        auto x = random_mat(k, c, 2, rng);
        auto sol = solve(m, m * x);
        REQUIRE(sol);
        CHECK(m * *sol == m * x);
    }
}

}  // namespace

TEST_SUITE("mat") {
    TEST_CASE("rank-nullity and kernels over F_101 and Q") {
        kernel_props(PrimeField(101), 1);
        kernel_props(Rationals(), 2);
    }

    TEST_CASE("inverse") {
        PrimeField F(7);
        Rng rng(3);
        for (int t = 0; t < 20; ++t) {
            auto a = random_invertible(F, 5, rng);
            CHECK(a * inverse(a) == Mat<PrimeField>::identity(F, 5));
        }
        Mat<PrimeField> sing(F, 2, 2);
        sing(0, 0) = sing(0, 1) = sing(1, 0) = sing(1, 1) = 1;
        CHECK_THROWS_AS(inverse(sing), std::domain_error);
    }

    TEST_CASE("rank depends on the characteristic") {
        /* det = -3 */
        Rationals Q;
        Mat<Rationals> a(Q, 2, 2);
        a(0, 0) = 1, a(0, 1) = 1, a(1, 0) = 2, a(1, 1) = -1;
        CHECK(rank(a) == 2);
        PrimeField F3(3);
        Mat<PrimeField> b(F3, 2, 2);
        b(0, 0) = 1, b(0, 1) = 1, b(1, 0) = 2, b(1, 1) = F3.from_int(-1);
        CHECK(rank(b) == 1);
    }

    TEST_CASE("rref and inconsistent systems") {
        Rationals Q;
        Mat<Rationals> m(Q, 2, 3);
        m(0, 0) = 2, m(0, 1) = 4, m(1, 2) = 3;
        auto e = rref(m);
        CHECK(e.pivots == std::vector<std::size_t>{0, 2});
        CHECK(e.m(0, 1) == 2);
        Mat<Rationals> dup(Q, 2, 1);
        dup(0, 0) = 1, dup(1, 0) = 1;
        Mat<Rationals> r2(Q, 2, 1);
        r2(0, 0) = 1, r2(1, 0) = 2;
        CHECK_FALSE(solve(dup, r2));
    }

    TEST_CASE("independent columns modulo a span") {
        PrimeField F(101);
        auto span = Mat<PrimeField>::identity(F, 4).cols_range(0, 2);
        Mat<PrimeField> m(F, 4, 3);
        m(0, 0) = 1;          /* in span */
        m(2, 1) = 1;          /* new */
        m(2, 2) = 2, m(1, 2) = 5;  /* dependent on the pick above modulo span */
        CHECK(independent_mod(span, m) == std::vector<std::size_t>{1});
    }

    TEST_CASE("block helpers") {
        PrimeField F(5);
        auto i3 = Mat<PrimeField>::identity(F, 3);
        auto h = i3.hcat(i3);
        CHECK(h.cols() == 6);
        CHECK(h.cols_range(3, 6) == i3);
        auto v = i3.vcat(i3.scaled(2));
        CHECK(v.rows_range(3, 6) == i3.scaled(2));
        CHECK(i3.select_cols({2, 0}).col(0) == i3.col(2));
        Mat<PrimeField> z(F, 4, 4);
        z.set_block(1, 1, i3);
        CHECK(rank(z) == 3);
        CHECK((i3 - i3).is_zero());
        CHECK(i3 + i3 == i3.scaled(2));
    }
}
