#include "doctest.h"
#include "monad/io.hpp"
#include "monad/zoo.hpp"

using namespace monad;

TEST_SUITE("io") {
    TEST_CASE("round trip for every family over F_101") {
        PrimeField F(101);
        for (const auto& f : family_names()) {
            CAPTURE(f);
            auto m = build(F, FamilyParams{f, {}, 1});
            auto text = print_monad(m);
            auto back = to_complex(F, parse_monad_string(text));
            CHECK(compose_check(back));
            CHECK(back.terms == m.terms);
            for (std::size_t i = 0; i < m.diffs.size(); ++i) CHECK(back.diffs[i] == m.diffs[i]);
            CHECK(print_monad(back) == text);
        }
    }

    TEST_CASE("round trip over Q and reduction") {
        Rationals Q;
        auto m = build(Q, FamilyParams{"c32", {1, mpq_class(1, 2), 0, 3}, 0});
        auto text = print_monad(m);
        CHECK(text.find("1/2") != std::string::npos);
        auto doc = parse_monad_string(text);
        CHECK(doc.field == FieldSpec::rationals());
        CHECK(print_doc(doc) == text);
        auto fp = to_complex(PrimeField(101), doc);
        CHECK(compose_check(fp));
        CHECK_THROWS_AS(to_complex(PrimeField(2), doc), ParseError);
    }

    TEST_CASE("comments and blank lines are ignored") {
        auto d = parse_monad_string("# O(0)\nmonad\n\nn 3\nfield q\nmiddle 0\nterm 0 0  # one summand\nend\n");
        CHECK(d.terms.size() == 1);
        CHECK(d.terms[0] == TwistList{0});
    }

    TEST_CASE("malformed input") {
        const char* bad[] = {
            "",
            "monad\nn 3\nfield q\nmiddle 0\nterm 0 0\n",
            "monad\nn 3\nfield q\nmiddle 0\nterm 0 0\nterm 2 0\nend\n",
            "monad\nn 3\nfield fp:4\nmiddle 0\nterm 0 0\nend\n",
            "monad\nn 3\nfield q\nmiddle 0\nterm -1 -1\nterm 0 0\nentry -1 0 0 1*1,0,0\nend\n",
            "monad\nn 3\nfield q\nmiddle 0\nterm -1 -1\nterm 0 0\nentry -1 0 0 1*2,0,0,0\nend\n",
            "monad\nn 3\nfield q\nmiddle 0\nterm -1 -1\nterm 0 0\nentry -1 3 0 1*1,0,0,0\nend\n",
            "monad\nn 3\nfield q\nmiddle 5\nterm 0 0\nend\n",
            "monad\nn 3\nfield q\nmiddle 0\nterm 0 x\nend\n",
            "monad\nn 3\nfield q\nmiddle 0\nbogus\nend\n",
        };
        for (const char* b : bad) {
            CAPTURE(b);
            CHECK_THROWS_AS(to_complex(Rationals{}, parse_monad_string(b)), ParseError);
        }
    }
}
