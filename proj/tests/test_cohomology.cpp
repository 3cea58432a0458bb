#include "doctest.h"
#include "monad/zoo.hpp"

using namespace monad;

namespace {

const PrimeField F101(101);

Complex<PrimeField> fam(const std::string& name, std::vector<mpq_class> p = {}) {
    return build(F101, FamilyParams{name, std::move(p), 0});
}

}  // namespace

TEST_SUITE("cohomology") {
    TEST_CASE("single term O has h^0 = binom(l+3,3)") {
        auto m = fam("O");
        for (int l = -5; l <= 3; ++l) {
            auto h = hypercoh(m, l);
            CHECK(h[0].lo == sdim(3, l));
            CHECK(h[1].lo == 0);
            CHECK(h[2].lo == 0);
            CHECK(h[3].lo == hn_dim(3, l));
            for (auto& v : h) CHECK(v.exact());
        }
    }

    TEST_CASE("c32 family values") {
        auto m = fam("c32", {1, 0, 0, 1});
        auto t = coh_table(m, -4, 1);
        CHECK(t.h(1, -1) == 2);
        CHECK(t.h(1, 0) == 2);
        CHECK(t.h(2, -3) == 4);
        CHECK(t.h(2, -2) == 1);
        auto d = coh_table(dualize(m), -3, 0);
        CHECK(d.h(1, -2) == 1);
        CHECK(d.h(1, -1) == 4);
        auto c = chern(m);
        CHECK(c == ChernData{3, 3, 0, 3, 2});
        auto s = spectrum(coh_table(m, spectrum_window_lo(c), spectrum_window_hi(c)), c);
        REQUIRE(s.found);
        CHECK(s.k == std::vector<int>{-1, 0, 0});
        CHECK(s.connected);
        CHECK(s.sum_matches_c3);
    }

    TEST_CASE("c36 family values") {
        auto m = fam("c36_schwarzenberger");
        auto c = chern(m);
        CHECK(c == ChernData{3, 3, 0, 3, 6});
        auto t = coh_table(m, spectrum_window_lo(c), spectrum_window_hi(c));
        CHECK(t.h(1, -2) == 0);
        CHECK(t.h(1, -1) == 0);
        auto s = spectrum(t, c);
        REQUIRE(s.found);
        CHECK(s.k == std::vector<int>{-1, -1, -1});
        CHECK(hypercoh(m, 1)[0].lo == 6);
    }

    TEST_CASE("euler characteristic") {
        CHECK(euler_char(ChernData{3, 3, 0, 3, 2}, 0) == -2);
        CHECK(euler_char(ChernData{3, 1, 0, 0, 0}, 0) == 1);
        CHECK(euler_char(ChernData{3, 9, 0, 18, 0}, 0) == -27);
        /* chi(3O(l)) - (l+2)c2 + c3/2 */
        for (int l = -6; l <= 4; ++l)
            for (int c3 : {-6, 0, 2, 4, 6})
                CHECK(euler_char(ChernData{3, 3, 0, 3, c3}, l) == 3 * sdim(3, l) - 3 * hn_dim(3, l) - (l + 2) * 3 + c3 / 2);
    }

    TEST_CASE("end bundle of the c36 family") {
        auto m = fam("c36_schwarzenberger");
        auto e = tensor_total(dualize(m), m);
        REQUIRE(e.terms.size() == 3);
        CHECK(e.terms[0].size() == 18);
        CHECK(e.terms[1].size() == 45);
        CHECK(e.terms[2].size() == 18);
        CHECK(compose_check(e));
        auto h = hypercoh(e, 0);
        CHECK(h[0].lo == 1);
        CHECK(h[1].lo == 28);
        CHECK(h[2].lo == 0);
        CHECK(h[3].lo == 0);
        for (auto& v : h) CHECK(v.exact());
        CHECK(chern(e) == ChernData{3, 9, 0, 18, 0});
    }
}
