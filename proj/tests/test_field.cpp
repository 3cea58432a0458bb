#include "doctest.h"
#include "monad/field.hpp"

using namespace monad;

TEST_SUITE("field") {
    TEST_CASE("prime field arithmetic") {
        PrimeField F(101);
        Rng rng(1);
        for (int i = 0; i < 200; ++i) {
            auto a = F.random_nonzero(rng), b = F.random(rng);
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.add(F.sub(b, a), a) == b);
            CHECK(F.add(a, F.neg(a)) == 0);
            /* Fermat */
            PrimeField::Elem x = 1;
            for (int e = 0; e < 100; ++e) x = F.mul(x, a);
            CHECK(x == 1);
            auto c = b;
            F.axpy(c, a, a);
            CHECK(c == F.add(b, F.mul(a, a)));
        }
        CHECK_THROWS(F.inv(0));
    }

    TEST_CASE("rationals into F_p") {
        PrimeField F(101);
        CHECK(F.from_q(mpq_class(1, 2)) == 51);
        CHECK(F.from_q(mpq_class(-3)) == 98);
        CHECK_THROWS(F.from_q(mpq_class(1, 101)));
        CHECK(F.to_q(100) == -1);
        CHECK(F.to_q(50) == 50);
        CHECK(F.from_int(-1) == 100);
        Rationals Q;
        CHECK(Q.inv(mpq_class(-2, 3)) == mpq_class(-3, 2));
        CHECK_THROWS(Q.inv(0));
    }

    TEST_CASE("field specs") {
        CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
        CHECK(FieldSpec::parse("fp:5").p == 5);
        CHECK(FieldSpec::parse("fp:101").str() == "fp:101");
        CHECK(FieldSpec::rationals().str() == "q");
        CHECK_THROWS(FieldSpec::parse("fp:100"));
        CHECK_THROWS(FieldSpec::parse("fp:"));
        CHECK_THROWS(FieldSpec::parse("r"));
        CHECK_THROWS(PrimeField(1));
        CHECK(is_prime(2));
        CHECK(is_prime(2147483647));
        CHECK_FALSE(is_prime(91));
    }

    TEST_CASE("rng is reproducible") {
        Rng a(42), b(42), c(43);
        bool differs = false;
        for (int i = 0; i < 10; ++i) {
            auto x = a.next();
            CHECK(x == b.next());
            differs |= x != c.next();
        }
        CHECK(differs);
        Rng d(7);
        for (int i = 0; i < 100; ++i) {
            auto v = d.between(-3, 3);
            CHECK(v >= -3);
            CHECK(v <= 3);
        }
    }
}
