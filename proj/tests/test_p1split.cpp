#include "doctest.h"
#include "monad/p1split.hpp"
#include "monad/zoo.hpp"

#include <numeric>

using namespace monad;

namespace {

const PrimeField F101(101);
using V = std::vector<PrimeField::Elem>;

}  // namespace

TEST_SUITE("p1split") {
    TEST_CASE("Koszul kernel on P^1") {
        FormMatrix<PrimeField> b(F101, 2, {0, 0}, {1});
        b.set(0, 0, Form<PrimeField>::var(F101, 2, 0));
        b.set(0, 1, Form<PrimeField>::var(F101, 2, 1));
        auto fb = kernel_free_basis(b);
        REQUIRE(fb.ok);
        CHECK(fb.twists == TwistList{-1});
        CHECK(b.after(*fb.gens).is_zero());
        /* generator is (u, -s) up to scale */
        auto g0 = fb.gens->at(0, 0), g1 = fb.gens->at(1, 0);
        CHECK(g0.coeff_of({0, 1}) != 0);
        CHECK(g0.coeff_of({1, 0}) == 0);
        CHECK(F101.add(g0.coeff_of({0, 1}), g1.coeff_of({1, 0})) == 0);
    }

    TEST_CASE("nullcorrelation kernel on a line: dimension oracle") {
        auto m = build(F101, FamilyParams{"nullcorrelation", {}, 0});
        auto L = LinearSubspace<PrimeField>::from_points({V{1, 2, 3, 4}, V{5, 0, 7, 1}}, F101);
        auto r = restrict_to(m, L);
        auto fb = kernel_free_basis(*r.diff(0));
        REQUIRE(fb.ok);
        CHECK(fb.twists.size() == 3);
        CHECK(std::accumulate(fb.twists.begin(), fb.twists.end(), 0) == -1);
        for (int t = 0; t <= 4; ++t) {
            long long h = 0;
            for (int a : fb.twists) h += sdim(1, a + t);
            CHECK(h == 4 * (t + 1) - (t + 2));
        }
    }

    TEST_CASE("c32 kernel on a general line") {
        auto m = build(F101, FamilyParams{"c32", {1, 0, 0, 1}, 0});
        auto L = LinearSubspace<PrimeField>::from_points({V{1, 7, 3, 9}, V{2, 0, 11, 5}}, F101);
        auto fb = kernel_free_basis(*restrict_to(m, L).diff(0));
        REQUIRE(fb.ok);
        CHECK(fb.twists.size() == 4);
        CHECK(std::accumulate(fb.twists.begin(), fb.twists.end(), 0) == -2);
    }

    TEST_CASE("secant line of the twisted cubic") {
        auto m = dualize(build(F101, FamilyParams{"c36_schwarzenberger", {}, 0}));
        auto s = split_on_line(m, V{0, 1, 0, 0}, V{0, 0, 1, 0});
        REQUIRE(s.ok);
        CHECK(s.split.parts == std::vector<int>{1, 1, -2});
    }

    TEST_CASE("trivial bundle and duality") {
        auto t = build(F101, FamilyParams{"trivial3", {}, 0});
        auto s = split_on_line(t, V{1, 0, 0, 0}, V{0, 1, 0, 0});
        REQUIRE(s.ok);
        CHECK(s.split.parts == std::vector<int>{0, 0, 0});
        auto m = build(F101, FamilyParams{"c32", {1, 0, 0, 1}, 0});
        Rng rng(3);
        for (int i = 0; i < 10; ++i) {
            V p(4), q(4);
            for (auto& x : p) x = F101.random(rng);
            for (auto& x : q) x = F101.random(rng);
            auto L = LinearSubspace<PrimeField>::from_points({p, q}, F101);
            if (L.dim() != 1) continue;
            auto a = splitting_type(restrict_to(m, L));
            auto b = splitting_type(restrict_to(dualize(m), L));
            REQUIRE(a.ok);
            REQUIRE(b.ok);
            std::vector<int> neg;
            for (int x : a.split.parts) neg.insert(neg.begin(), -x);
            CHECK(neg == b.split.parts);
        }
    }

    TEST_CASE("jumping lines of the c32 family") {
        auto m = dualize(build(F101, FamilyParams{"c32", {1, 0, 0, 1}, 0}));
        auto s = split_on_line(m, V{0, 3, 0, 5}, V{2, 0, 9, 0});
        REQUIRE(s.ok);
        CHECK(h1_of(s.split) == 1);
    }

    TEST_CASE("torsion rejected") {
        /* O(-1) -> O via s: cokernel is a skyscraper */
        FormMatrix<PrimeField> a(F101, 2, {-1}, {0});
        a.set(0, 0, Form<PrimeField>::var(F101, 2, 0));
        auto r = splitting_type(resolution(a, 1));
        CHECK_FALSE(r.ok);
    }
}
