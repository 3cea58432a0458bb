#include "doctest.h"
#include "monad/p1split.hpp"
#include "monad/zoo.hpp"

using namespace monad;

namespace {

const PrimeField F101(101);
using V = std::vector<PrimeField::Elem>;

Complex<PrimeField> fam(const std::string& name, std::vector<mpq_class> p = {}, std::uint64_t seed = 0) {
    return build(F101, FamilyParams{name, std::move(p), seed});
}

}  // namespace

TEST_SUITE("zoo") {
    TEST_CASE("every family builds, is a stable bundle and has its declared classes") {
        for (const auto& f : family_names()) {
            CAPTURE(f);
            auto m = fam(f);
            CHECK(compose_check(m));
            CHECK(certify_bundle(m).ok);
            CHECK(chern(m) == declared_chern(f));
            if (f != "O" && f != "trivial3" && f != "nullcorrelation") CHECK(monad_defect(m) == "");
        }
    }

    TEST_CASE("c32 rejects a zero determinant") {
        CHECK_THROWS_AS(fam("c32", {1, 2, 2, 4}), std::invalid_argument);
    }

    TEST_CASE("alpha-space dimensions") {
        auto b1 = *fam("c30_min", {1}).diff(0);
        CHECK(solve_left_differential(b1, {-1, -1, -1}).dim == 18);
        auto b0 = *fam("c30_min", {0}).diff(0);
        CHECK(solve_left_differential(b0, {-1, -1, -1}).dim == 21);
        auto bm = *fam("c30_max").diff(0);
        CHECK(solve_left_differential(bm, {-2}).dim == 19);
        /* every basis element composes to zero */
        for (const auto& a : solve_left_differential(b1, {-1, -1, -1}).basis) CHECK(b1.after(a).is_zero());
    }

    TEST_CASE("c30 family: h^1(E(1)) jumps at t = 0 and is seen on L_0") {
        auto L0 = LinearSubspace<PrimeField>::from_points({V{0, 0, 1, 0}, V{0, 0, 0, 1}}, F101);
        for (int t : {0, 1, 2, 5}) {
            CAPTURE(t);
            auto m = fam("c30_min", {t});
            auto h = hypercoh(m, 1)[1];
            REQUIRE(h.exact());
            CHECK(h.lo == (t == 0 ? 1 : 0));
            auto hl = hypercoh(restrict_to(m, L0), 1)[1];
            REQUIRE(hl.exact());
            CHECK(hl.lo == h.lo);
        }
    }

    TEST_CASE("the given betas already have the canonical pattern") {
        for (int t : {0, 1, 3}) {
            bool deg = false;
            std::string why;
            CHECK(check_canonical_pattern(*fam("c30_min", {t}).diff(0), BetaShape::C30, &deg, &why));
            CHECK(deg == (t == 0));
            CHECK(check_canonical_pattern(*fam("c32_moduli", {t}).diff(0), BetaShape::C32, &deg, &why));
            CHECK(deg == (t == 0));
        }
    }

    TEST_CASE("canonicalize after random automorphisms") {
        Rng rng(11);
        for (auto shape : {BetaShape::C30, BetaShape::C32}) {
            for (int t : {0, 1, 4}) {
                CAPTURE(t);
                auto beta = shape == BetaShape::C30 ? *fam("c30_min", {t}).diff(0) : *fam("c32_moduli", {t}).diff(0);
                auto g = random_automorphism(F101, 4, beta.tgt(), rng);
                auto f = random_automorphism(F101, 4, beta.src(), rng);
                auto in = g.after(beta).after(f);
                auto c = canonicalize_beta(in, shape, 5);
                REQUIRE_MESSAGE(c.ok, c.failure);
                CHECK(check_canonical_pattern(*c.beta, shape));
                CHECK(c.left_inv->after(*c.beta).after(*c.right_inv) == in);
                CHECK(c.degenerate == (t == 0));
            }
        }
    }

    TEST_CASE("automorphism inverse") {
        Rng rng(2);
        TwistList tw{1, 0, 0, -1, -2};
        for (int i = 0; i < 5; ++i) {
            auto f = random_automorphism(F101, 4, tw, rng);
            CHECK(invert_automorphism(f).after(f) == identity_map(F101, 4, tw));
        }
    }

    TEST_CASE("random shapes have their spectra") {
        auto sp = [](const Complex<PrimeField>& m) {
            auto c = chern(m);
            return spectrum(coh_table(m, spectrum_window_lo(c), spectrum_window_hi(c)), c).k;
        };
        CHECK(sp(fam("c36_random")) == std::vector<int>{-1, -1, -1});
        CHECK(hypercoh(fam("c36_random"), 1)[0].lo == 6);
        CHECK(sp(fam("c32_random")) == std::vector<int>{-1, 0, 0});
        CHECK(sp(fam("c30_min_random")) == std::vector<int>{0, 0, 0});
        CHECK(sp(fam("c30_max")) == std::vector<int>{-1, 0, 1});
        CHECK(sp(fam("c34")) == std::vector<int>{-1, -1, 0});
    }

    TEST_CASE("c34 for every pencil normal form") {
        for (int nf = 1; nf <= 7; ++nf) {
            CAPTURE(nf);
            auto r = random_instance(F101, "c34", 3, nf);
            REQUIRE_MESSAGE(r.m.has_value(), r.failure);
            CHECK(chern(*r.m) == ChernData{3, 3, 0, 3, 4});
        }
    }

    TEST_CASE("random instances are reproducible") {
        auto a = random_instance(F101, "c32", 9);
        auto b = random_instance(F101, "c32", 9);
        REQUIRE(a.m);
        REQUIRE(b.m);
        CHECK(a.m->diffs[0] == b.m->diffs[0]);
        CHECK(a.m->diffs[1] == b.m->diffs[1]);
    }
}
