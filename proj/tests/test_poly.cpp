#include "doctest.h"
#include "monad/poly.hpp"

using namespace monad;

namespace {

const PrimeField F(101);
using V = std::vector<PrimeField::Elem>;

Form<PrimeField> random_form(int nvars, int d, Rng& rng) {
    Form<PrimeField> f(F, nvars, d);
    std::vector<std::pair<PrimeField::Elem, Exps>> ts;
    for (const auto& e : monomial_basis(nvars - 1, d)) ts.emplace_back(F.random(rng), e);
    return Form<PrimeField>::from_terms(F, nvars, d, ts);
}

V random_point(int n, Rng& rng) {
    V x(static_cast<std::size_t>(n));
    for (auto& c : x) c = F.random(rng);
    return x;
}

}  // namespace

TEST_SUITE("poly") {
    TEST_CASE("monomial counts and order") {
        for (int n = 0; n <= 3; ++n)
            for (int d = 0; d <= 6; ++d) {
                CHECK(sdim(n, d) == binom(n + d, n));
                const auto& b = monomial_basis(n, d);
                CHECK(static_cast<long long>(b.size()) == sdim(n, d));
                for (std::size_t i = 0; i < b.size(); ++i) {
                    CHECK(monomial_index(b[i]) == i);
                    if (i) CHECK(b[i - 1] > b[i]);
                }
            }
        CHECK(sdim(3, -1) == 0);
        CHECK(monomial_basis(3, 2).front() == Exps{2, 0, 0, 0});
        CHECK(monomial_basis(3, 2).back() == Exps{0, 0, 0, 2});
        /* h^3(O(-4)) = 1, h^3(O(-5)) = 4 */
        CHECK(hn_dim(3, -4) == 1);
        CHECK(hn_dim(3, -5) == 4);
        CHECK(hn_dim(3, 0) == 0);
        CHECK(hn_dim(1, -3) == 2);
    }

    TEST_CASE("ring laws and evaluation") {
        Rng rng(11);
        for (int t = 0; t < 20; ++t) {
            auto f = random_form(4, 2, rng), g = random_form(4, 1, rng), h = random_form(4, 1, rng);
            auto x = random_point(4, rng);
            CHECK((f * g).eval(x) == F.mul(f.eval(x), g.eval(x)));
            CHECK(f * (g + h) == f * g + f * h);
            CHECK(g * h == h * g);
            CHECK((g - g).is_zero());
            CHECK((-g).eval(x) == F.neg(g.eval(x)));
            CHECK(g.scaled(3).eval(x) == F.mul(3, g.eval(x)));
        }
        auto X0 = Form<PrimeField>::var(F, 4, 0), X3 = Form<PrimeField>::var(F, 4, 3);
        CHECK((X0 * X3).coeff_of({1, 0, 0, 1}) == 1);
        CHECK(X3.coeff(3) == 1);
        CHECK_THROWS(X0 + X0 * X3);
    }

    TEST_CASE("multiplication matrices compose like products") {
        Rng rng(5);
        auto f = random_form(4, 1, rng), g = random_form(4, 2, rng);
        CHECK(mult_matrix(f * g, 1) == mult_matrix(f, 3) * mult_matrix(g, 1));
        auto m = mult_matrix(f, 2);
        CHECK(m.rows() == 20);
        CHECK(m.cols() == 10);
        /* multiplication by a nonzero form is injective */
        CHECK(rank(m) == 10);
    }

    TEST_CASE("linear subspaces") {
        Rng rng(2);
        auto p = random_point(4, rng), q = random_point(4, rng);
        auto L = LinearSubspace<PrimeField>::from_points({p, q}, F);
        REQUIRE(L.dim() == 1);
        CHECK(L.ambient() == 3);
        CHECK(L.contains(p));
        CHECK(L.contains(q));
        V r(4);
        for (std::size_t i = 0; i < 4; ++i) r[i] = F.add(F.mul(2, p[i]), F.mul(7, q[i]));
        CHECK(L.contains(r));
        CHECK(L.equations().rows() == 2);
        auto L2 = LinearSubspace<PrimeField>::from_equations(L.equations());
        CHECK(L2.contains(p));
        CHECK(L2.dim() == 1);
        auto H = LinearSubspace<PrimeField>::plane({1, 2, 3, 4}, F);
        CHECK(H.dim() == 2);
        CHECK(H.contains({F.neg(2), 1, 0, 0}));
        CHECK_FALSE(H.contains({1, 0, 0, 0}));
    }

    TEST_CASE("substitution agrees with evaluation along the subspace") {
        Rng rng(9);
        auto f = random_form(4, 3, rng);
        auto H = LinearSubspace<PrimeField>::plane(random_point(4, rng), F);
        auto fh = substitute(f, H);
        CHECK(fh.nvars() == 3);
        for (int t = 0; t < 10; ++t) {
            auto y = random_point(3, rng);
            V x(4, 0);
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t i = 0; i < 3; ++i) x[j] = F.add(x[j], F.mul(y[i], H.param(i, j)));
            CHECK(fh.eval(y) == f.eval(x));
        }
    }

    TEST_CASE("projective points over F_p") {
        CHECK(projective_points(5, 3).size() == 156);
        CHECK(projective_points(2, 3).size() == 15);
        CHECK(projective_points(3, 1).size() == 4);
        for (const auto& x : projective_points(3, 2)) {
            std::size_t i = 0;
            while (x[i] == 0) ++i;
            CHECK(x[i] == 1);
        }
    }
}
