#include "doctest.h"
#include "monad/scanners.hpp"
#include "monad/zoo.hpp"

using namespace monad;

namespace {

const PrimeField F101(101);
using V = std::vector<PrimeField::Elem>;

Complex<PrimeField> fam(const std::string& name, std::vector<mpq_class> p = {}) {
    return build(F101, FamilyParams{name, std::move(p), 0});
}

long long count_of(const ScanReport& r, const std::string& key) {
    auto it = r.summary.find(key);
    return it == r.summary.end() ? 0 : std::stoll(it->second);
}

}  // namespace

TEST_SUITE("scanners") {
    TEST_CASE("stability verdicts") {
        CHECK(stability_check(fam("c36_schwarzenberger")).verdict == Verdict::Stable);
        CHECK(stability_check(fam("c32", {1, 0, 0, 1})).verdict == Verdict::Stable);
        auto t = stability_check(fam("trivial3"));
        CHECK(t.verdict == Verdict::Unstable);
        CHECK(t.h0 == 3);
        CHECK(stability_check(fam("nullcorrelation")).verdict == Verdict::Unsupported);
    }

    TEST_CASE("plane and line sets") {
        PrimeField F5(5);
        CHECK(plane_set(F5, {true, 0, 0}).size() == 156);
        CHECK(line_set(F5, {true, 0, 0}).size() == 806);
        auto a = plane_set(F101, {false, 50, 4});
        auto b = plane_set(F101, {false, 50, 4});
        CHECK(a.size() == 50);
        CHECK(a == b);
        CHECK(line_set(F101, {false, 20, 1}).size() == 20);
    }

    TEST_CASE("restrictions of the c36 bundle") {
        auto m = fam("c36_schwarzenberger");
        auto planes = plane_set(F101, {false, 50, 0});
        auto r = restriction_stability_sample(m, planes);
        CHECK(count_of(r, "h0_EHdual_positive") == 50);
        CHECK(count_of(r, "h0_EH_positive") == 0);
    }

    TEST_CASE("restrictions of the c30 min bundle are stable generically") {
        auto m = fam("c30_min", {1});
        auto r = restriction_stability_sample(m, plane_set(F101, {false, 50, 0}));
        CHECK(count_of(r, "h0_EH_positive") <= 5);
        CHECK(count_of(r, "h0_EHdual_positive") <= 5);
        CHECK(count_of(r, "max_h0_EH") <= 2);
    }

    TEST_CASE("c30 max: the special plane has order 1") {
        auto m = fam("c30_max");
        auto hs = unstable_plane_candidates(m, 1);
        REQUIRE(hs.size() == 1);
        CHECK(unstable_plane_order(m, hs[0]) == 1);
        for (const auto& h : plane_set(F101, {false, 10, 3})) CHECK(unstable_plane_order(m, h) == 0);
    }

    TEST_CASE("c32: no unstable planes among samples") {
        auto m = fam("c32", {1, 0, 0, 1});
        auto r = restriction_stability_sample(m, plane_set(F101, {false, 30, 2}));
        CHECK(count_of(r, "unstable_planes") == 0);
    }

    TEST_CASE("mu dimensions and corank against restriction") {
        auto c30 = fam("c30_min", {1});
        auto mu = mu_build(c30, Side::E);
        CHECK(mu.d == 3);
        CHECK(mu.rows == 3);
        auto c32 = fam("c32", {1, 0, 0, 1});
        auto mud = mu_build(c32, Side::Dual);
        CHECK(mud.d == 4);
        CHECK(mud.rows == 4);
        CHECK(mu_build(fam("c36_schwarzenberger"), Side::E).d == 0);
        for (const auto& h : plane_set(F101, {false, 15, 9})) {
            auto H = LinearSubspace<PrimeField>::plane(h, F101);
            CHECK(mu.corank(h) == static_cast<std::size_t>(restricted_h0(c30, H, 0)));
            CHECK(mud.corank(h) == static_cast<std::size_t>(restricted_h0(dualize(c32), H, 0)));
        }
    }

    TEST_CASE("kernel degree: a = -1 iff the M_i share a kernel vector") {
        /* 1x1 zero matrices: the constant vector is killed */
        MuData<PrimeField> z;
        z.d = z.rows = 1;
        z.M.assign(4, Mat<PrimeField>(F101, 1, 1));
        CHECK(kernel_degree(z) == -1);
        /* Koszul-type 1x4 -> the kernel of (y0 y1 y2 y3) on 4 copies starts in degree 2 */
        MuData<PrimeField> k;
        k.d = 4;
        k.rows = 1;
        for (int i = 0; i < 4; ++i) {
            Mat<PrimeField> mi(F101, 1, 4);
            mi(0, i) = 1;
            k.M.push_back(mi);
        }
        CHECK(kernel_degree(k) == -2);
        auto dual = mu_build(fam("c32", {1, 0, 0, 1}), Side::Dual);
        CHECK(kernel_degree(dual) != -1);
    }

    TEST_CASE("c32 jumping lines joining the two skew lines") {
        auto m = fam("c32", {1, 0, 0, 1});
        Rng rng(5);
        std::vector<LinearSubspace<PrimeField>> lines;
        while (lines.size() < 10) {
            V p{0, F101.random(rng), 0, F101.random(rng)}, q{F101.random(rng), 0, F101.random(rng), 0};
            auto L = LinearSubspace<PrimeField>::from_points({p, q}, F101);
            if (L.dim() == 1) lines.push_back(L);
        }
        auto r = jumping_line_scan(m, lines);
        CHECK(count_of(r, "jumping") == 10);
        for (std::size_t i = 0; i < r.records.size(); ++i) CHECK(r.value(i, "h1_dual") == "1");
        auto g = jumping_line_scan(m, line_set(F101, {false, 20, 0}));
        auto gt = g.summary.at("generic_type");
        CHECK((gt == "(0,0,0)" || gt == "(1,0,-1)"));
    }

    TEST_CASE("bilinear criterion") {
        CHECK(bilinear_criteria(3, 1, 0).fires);
        CHECK(bilinear_criteria(2, 1, 0).fires);
        CHECK_FALSE(bilinear_criteria(4, 1, 0).fires);
        CHECK_FALSE(bilinear_criteria(0, 0, 1).applicable);
    }

    TEST_CASE("pencil normal forms are recognised") {
        for (int nf = 1; nf <= 7; ++nf) {
            CAPTURE(nf);
            auto pc = pencil_classify(pencil_normal_form(F101, nf));
            CHECK(pc.rank2_everywhere);
            CHECK(pc.generic_rank3);
            CHECK(pc.candidates == std::vector<int>{nf});
        }
        auto one = pencil_classify(pencil_normal_form(F101, 1));
        CHECK(one.multiplicities == std::vector<int>{3});
        CHECK(one.fp_points == 1);
        auto three = pencil_classify(pencil_normal_form(F101, 3));
        CHECK(three.fp_points == 3);
        CHECK(pencil_classify(pencil_normal_form(F101, 7)).torsion_length == 0);
        /* the same matrix moved by random automorphisms keeps its case */
        Rng rng(8);
        for (int nf = 1; nf <= 7; ++nf) {
            auto phi = pencil_normal_form(F101, nf);
            auto g = random_automorphism(F101, 4, phi.tgt(), rng);
            auto f = random_automorphism(F101, 4, phi.src(), rng);
            CHECK(pencil_classify(g.after(phi).after(f)).candidates == std::vector<int>{nf});
        }
    }

    TEST_CASE("pencil dropping to rank 1 somewhere") {
        auto X = [](int i) { return Form<PrimeField>::var(F101, 4, i); };
        FormMatrix<PrimeField> phi(F101, 4, {0, 0, 0}, {1, 1});
        phi.set(0, 0, X(0));
        phi.set(0, 1, X(1));
        phi.set(0, 2, X(2));
        phi.set(1, 2, X(3));
        auto pc = pencil_classify(phi);
        CHECK_FALSE(pc.rank2_everywhere);
        CHECK(pc.candidates.empty());
    }

    TEST_CASE("c34: h^0(E_H) = 1 exactly through the special point") {
        auto r = random_instance(F101, "c34", 0, 7);
        REQUIRE(r.m);
        const auto& x = r.special_point;
        Rng rng(4);
        int through = 0;
        for (int i = 0; i < 20; ++i) {
            V h(4);
            for (auto& c : h) c = F101.random(rng);
            if (i % 2 == 0) {
                /* force x into H: adjust the last nonzero coordinate of x */
                std::size_t j = 3;
                while (x[j] == 0) --j;
                PrimeField::Elem s = 0;
                for (std::size_t t = 0; t < 4; ++t)
                    if (t != j) s = F101.add(s, F101.mul(h[t], x[t]));
                h[j] = F101.mul(F101.neg(s), F101.inv(x[j]));
            }
            bool zero = true;
            for (auto c : h) zero &= c == 0;
            if (zero) continue;
            auto H = LinearSubspace<PrimeField>::plane(h, F101);
            bool in = H.contains(x);
            through += in;
            CHECK(restricted_h0(*r.m, H, 0) == (in ? 1 : 0));
        }
        CHECK(through >= 10);
    }

    TEST_CASE("reports do not depend on the thread count") {
        PrimeField F5(5);
        auto m = build(F5, FamilyParams{"c32", {1, 0, 0, 1}, 0});
        auto planes = plane_set(F5, {true, 0, 0});
        auto lines = line_set(F5, {false, 40, 2});
        auto mu = mu_build(m, Side::Dual);
        set_scan_threads(1);
        auto a = restriction_stability_sample(m, planes).tsv() + jumping_line_scan(m, lines).tsv() +
                 mu_corank_scan(mu, planes).tsv();
        set_scan_threads(4);
        auto b = restriction_stability_sample(m, planes).tsv() + jumping_line_scan(m, lines).tsv() +
                 mu_corank_scan(mu, planes).tsv();
        set_scan_threads(1);
        CHECK(a == b);
    }
}
