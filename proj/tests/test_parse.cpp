#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace grpord;

TEST_CASE("word grammar") {
    CHECK(parse_word("1").is_identity());
    CHECK(parse_word("").is_identity());
    CHECK(parse_word("a^2 b^-1 x[0,1]^3").syllable_count() == 3);
    CHECK(parse_word("a a") == parse_word("a^2"));
    CHECK(parse_word("x[0,0] x[0,0]^-1").is_identity());
    CHECK(parse_word("x[-2,3]").syllables()[0].gen == GenLabel::indexed('x', -2, 3));

    CHECK_THROWS_AS(parse_word("q"), parse_error);
    CHECK_THROWS_AS(parse_word("a^"), parse_error);
    CHECK_THROWS_AS(parse_word("x[1"), parse_error);
    CHECK_THROWS_AS(parse_word("x[1;2]"), parse_error);
    CHECK_THROWS_AS(parse_word("a^two"), parse_error);
}

TEST_CASE("print and reparse round-trips") {
    Sampler rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        ReducedWord w = trial % 2 ? random_indexed_word(rng)
                                  : random_named_word(rng, std::vector<char>{'a', 'b', 'c', 't'});
        CHECK(parse_word(print_word(w)) == w);
    }
    CHECK(print_word(ReducedWord{}) == "1");
    CHECK(print_word(parse_word("a^1")) == "a");
}

TEST_CASE("matrix and point grammar") {
    IntMatrix2 m = parse_matrix2("2,1;1,1");
    CHECK(m.m11 == 2);
    CHECK(m.m22 == 1);
    CHECK(m.str() == "2,1;1,1");
    CHECK(parse_matrix2("-1,0;0,-1").det() == 1);
    CHECK_THROWS_AS(parse_matrix2("2,1,1,1"), parse_error);
    CHECK_THROWS_AS(parse_matrix2("2;1"), parse_error);
    CHECK_THROWS_AS(parse_matrix2("a,b;c,d"), parse_error);

    IndexPair p = parse_point("-3,17");
    CHECK(p.i == -3);
    CHECK(p.j == 17);
    CHECK(print_point(p) == "-3,17");
    CHECK_THROWS_AS(parse_point("5"), parse_error);
}

TEST_CASE("normal form rendering") {
    CHECK(print_nf(nf_of_word(parse_word("a b c"))) == "a^1 b^1 · x[1,1]");
    CHECK(print_nf(nf_of_word(parse_word("1"))) == "a^0 b^0 · 1");
}
