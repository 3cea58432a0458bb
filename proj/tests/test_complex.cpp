#include "doctest.h"
#include "monad/cohomology.hpp"
#include "monad/zoo.hpp"

using namespace monad;

namespace {

const PrimeField F101(101);

template <class K>
bool same(const Complex<K>& a, const Complex<K>& b) {
    if (a.pmin != b.pmin || a.middle != b.middle || a.terms != b.terms || a.diffs.size() != b.diffs.size()) return false;
    for (std::size_t i = 0; i < a.diffs.size(); ++i)
        if (!(a.diffs[i] == b.diffs[i])) return false;
    return true;
}

}  // namespace

TEST_SUITE("complex") {
    TEST_CASE("zoo monads compose to zero and are bundles") {
        for (const auto& f : family_names()) {
            CAPTURE(f);
            auto m = build(F101, FamilyParams{f, {}, 1});
            CHECK(compose_check(m));
            CHECK(certify_bundle(m).ok);
            CHECK(complex_rank(m) == declared_chern(f).rank);
        }
    }

    TEST_CASE("fiberwise exactness over F_5 and a broken map") {
        PrimeField F5(5);
        auto m = build(F5, FamilyParams{"nullcorrelation", {}, 0});
        auto r = fiberwise_check(m, FiberMode{FiberMode::Kind::ExhaustiveFp, 0, 0, 16});
        CHECK(r.ok);
        CHECK(r.checked == 156);
        /* drop X_0 from beta: it then vanishes at (1:0:0:0) */
        auto beta = m.diffs[1];
        FormMatrix<PrimeField> b2(F5, 4, beta.src(), beta.tgt());
        for (std::size_t j = 0; j < beta.cols(); ++j) {
            std::vector<std::pair<PrimeField::Elem, Exps>> ts;
            for (const auto& [c, e] : beta.at(0, j).terms())
                if (e[0] == 0) ts.emplace_back(c, e);
            b2.set(0, j, Form<PrimeField>::from_terms(F5, 4, 1, ts));
        }
        auto broken = m;
        broken.diffs[1] = b2;
        CHECK_FALSE(certify_bundle(broken).ok);
        auto rb = fiberwise_check(broken, FiberMode{FiberMode::Kind::ExhaustiveFp, 0, 0, 16});
        CHECK_FALSE(rb.ok);
        CHECK_FALSE(rb.witnesses.empty());
    }

    TEST_CASE("duality and twists") {
        for (const auto& f : {"c36_schwarzenberger", "c32", "c30_min"}) {
            CAPTURE(f);
            auto m = build(F101, FamilyParams{f, {1, 0, 0, 1}, 0});
            if (std::string(f) == "c30_min") m = build(F101, FamilyParams{f, {1}, 0});
            CHECK(same(dualize(dualize(m)), m));
            auto t = coh_table(m, -3, 1), t1 = coh_table(twist(m, 1), -4, 0);
            for (int l = -3; l <= 1; ++l)
                for (int i = 0; i <= 3; ++i) CHECK(t.at(i, l).lo == t1.at(i, l - 1).lo);
        }
    }

    TEST_CASE("h0 and hn maps are functorial") {
        Rng rng(3);
        auto m = build(F101, FamilyParams{"c32", {1, 0, 0, 1}, 0});
        const auto& a = m.diffs[0];
        const auto& b = m.diffs[1];
        auto g = random_automorphism(F101, 4, b.src(), rng);
        auto ba = b.after(g);
        for (int l = -5; l <= 2; ++l) {
            CHECK(ba.h0_map(l) == b.h0_map(l) * g.h0_map(l));
            CHECK(ba.hn_map(l) == b.hn_map(l) * g.hn_map(l));
        }
        CHECK(b.after(a).is_zero());
        CHECK(a.transpose().transpose() == a);
    }

    TEST_CASE("entries must have the forced degree") {
        FormMatrix<PrimeField> f(F101, 4, {0}, {2});
        CHECK_THROWS(f.set(0, 0, Form<PrimeField>::var(F101, 4, 0)));
        f.set(0, 0, Form<PrimeField>::var(F101, 4, 0) * Form<PrimeField>::var(F101, 4, 1));
        CHECK_FALSE(f.is_zero());
        CHECK(f.twisted(3).src() == TwistList{3});
    }

    TEST_CASE("reduction mod p of the rational construction") {
        Rationals Q;
        for (const auto& f : {"c36_schwarzenberger", "nullcorrelation", "trivial3"}) {
            CAPTURE(f);
            CHECK(same(reduce_mod(build(Q, FamilyParams{f, {}, 0}), 101), build(F101, FamilyParams{f, {}, 0})));
        }
    }

    TEST_CASE("restriction and tensor products") {
        auto m = build(F101, FamilyParams{"c36_schwarzenberger", {}, 0});
        auto H = LinearSubspace<PrimeField>::plane({1, 2, 3, 5}, F101);
        auto mh = restrict_to(m, H);
        CHECK(mh.n == 2);
        CHECK(compose_check(mh));
        CHECK(mh.diffs[0].at(0, 0) == substitute(m.diffs[0].at(0, 0), H));
        auto nc = build(F101, FamilyParams{"nullcorrelation", {}, 0});
        auto t = tensor_total(nc, m);
        CHECK(compose_check(t));
        CHECK(complex_rank(t) == 6);
        CHECK(chern(t).c1 == 0);
    }

    TEST_CASE("single terms and resolutions") {
        auto o = single_term(F101, 3, {0, -1});
        CHECK(complex_rank(o) == 2);
        CHECK(compose_check(o));
        FormMatrix<PrimeField> a(F101, 4, {-1}, {0, 0});
        a.set(0, 0, Form<PrimeField>::var(F101, 4, 0));
        a.set(1, 0, Form<PrimeField>::var(F101, 4, 1));
        auto r = resolution(a, 3);
        CHECK(r.pmin == -1);
        CHECK(complex_rank(r) == 1);
    }
}
