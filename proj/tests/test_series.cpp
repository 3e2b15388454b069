#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace grpord;
using testutil::naive_magnus;
using testutil::series_matches_naive;

namespace {

const IndexPair U{0, 0};
const IndexPair V{1, 0};

TruncatedSeries one_plus(const IndexPair& var, int bound) {
    TruncatedSeries s = TruncatedSeries::one(bound);
    s.add(Monomial{var}, 1);
    return s;
}

}  // namespace

TEST_CASE("series multiplication") {
    SECTION("(1+U)(1+V) at degree 2") {
        TruncatedSeries prod = series_multiply(one_plus(U, 2), one_plus(V, 2));
        CHECK(prod.coefficient({}) == 1);
        CHECK(prod.coefficient({U}) == 1);
        CHECK(prod.coefficient({V}) == 1);
        CHECK(prod.coefficient({U, V}) == 1);
        CHECK(prod.coefficient({V, U}) == 0);
        CHECK(prod.terms().size() == 4);
    }
    SECTION("multiplying by the constant 1 is neutral") {
        TruncatedSeries s = one_plus(U, 3);
        s.add(Monomial{V, U}, -2);
        CHECK(series_multiply(s, TruncatedSeries::one(3)) == s);
        CHECK(series_multiply(TruncatedSeries::one(3), s) == s);
    }
    SECTION("(1+U)(1-U+U^2) truncates to 1 at degree 2") {
        TruncatedSeries rhs(2);
        rhs.add({}, 1);
        rhs.add({U}, -1);
        rhs.add({U, U}, 1);
        CHECK(series_multiply(one_plus(U, 2), rhs) == TruncatedSeries::one(2));
    }
    SECTION("mismatched truncation degrees are an error") {
        CHECK_THROWS_AS(series_multiply(one_plus(U, 2), one_plus(U, 3)), std::invalid_argument);
    }
    SECTION("associative up to truncation on random small series") {
        Sampler rng(31);
        auto random_series = [&rng](int bound) {
            TruncatedSeries s(bound);
            for (int t = 0; t < 5; ++t) {
                Monomial m;
                int deg = static_cast<int>(rng.below(3));
                for (int d = 0; d < deg; ++d) m.push_back(rng.below(2) ? U : V);
                s.add(m, Int(rng.uniform(-2, 2)));
            }
            return s;
        };
        for (int trial = 0; trial < 100; ++trial) {
            TruncatedSeries a = random_series(4), b = random_series(4), c = random_series(4);
            CHECK(series_multiply(series_multiply(a, b), c) ==
                  series_multiply(a, series_multiply(b, c)));
        }
    }
}

TEST_CASE("unit inverse") {
    SECTION("geometric series for 1+U at degree 3") {
        TruncatedSeries inv = unit_inverse(one_plus(U, 3));
        CHECK(inv.coefficient({}) == 1);
        CHECK(inv.coefficient({U}) == -1);
        CHECK(inv.coefficient({U, U}) == 1);
        CHECK(inv.coefficient({U, U, U}) == -1);
        CHECK(inv.terms().size() == 4);
    }
    SECTION("constant 1 is its own inverse") {
        CHECK(unit_inverse(TruncatedSeries::one(4)) == TruncatedSeries::one(4));
    }
    SECTION("1+U+V at degree 2") {
        TruncatedSeries s = one_plus(U, 2);
        s.add(Monomial{V}, 1);
        TruncatedSeries inv = unit_inverse(s);
        CHECK(inv.coefficient({U}) == -1);
        CHECK(inv.coefficient({V}) == -1);
        CHECK(inv.coefficient({U, U}) == 1);
        CHECK(inv.coefficient({U, V}) == 1);
        CHECK(inv.coefficient({V, U}) == 1);
        CHECK(inv.coefficient({V, V}) == 1);
        CHECK(inv.terms().size() == 7);
    }
    SECTION("non-unit input is an error") {
        TruncatedSeries two = TruncatedSeries::constant(2, 3);
        CHECK_THROWS_AS(unit_inverse(two), std::invalid_argument);
        TruncatedSeries zero(3);
        CHECK_THROWS_AS(unit_inverse(zero), std::invalid_argument);
    }
    SECTION("s * unit_inverse(s) = 1 on random units") {
        Sampler rng(32);
        for (int trial = 0; trial < 100; ++trial) {
            TruncatedSeries s = TruncatedSeries::one(4);
            for (int t = 0; t < 4; ++t) {
                Monomial m;
                int deg = 1 + static_cast<int>(rng.below(3));
                for (int d = 0; d < deg; ++d) m.push_back(rng.below(2) ? U : V);
                s.add(m, Int(rng.uniform(-2, 2)));
            }
            CHECK(series_multiply(s, unit_inverse(s)) == TruncatedSeries::one(4));
        }
    }
}

TEST_CASE("magnus expansion") {
    SECTION("a generator maps to 1 + X") {
        TruncatedSeries s = magnus_expand(parse_word("x[0,0]"), 3);
        CHECK(s.coefficient({}) == 1);
        CHECK(s.coefficient({U}) == 1);
        CHECK(s.terms().size() == 2);
    }
    SECTION("identity maps to 1") {
        CHECK(magnus_expand(ReducedWord{}, 3) == TruncatedSeries::one(3));
    }
    SECTION("commutator of two generators at degree 2") {
        ReducedWord comm = parse_word("x[0,0] x[1,0] x[0,0]^-1 x[1,0]^-1");
        TruncatedSeries s = magnus_expand(comm, 2);
        CHECK(s.coefficient({}) == 1);
        CHECK(s.coefficient({U, V}) == 1);
        CHECK(s.coefficient({V, U}) == -1);
        CHECK(s.terms().size() == 3);
        CHECK(series_matches_naive(s, naive_magnus(comm, 2)));
    }
    SECTION("unmapped generator is an error") {
        CHECK_THROWS_AS(
            magnus_expand(parse_word("a"), 2,
                          [](const GenLabel&) -> IndexPair {
                              throw unknown_generator("unmapped");
                          }),
            unknown_generator);
    }
    SECTION("constant term is always 1 and matches the naive model") {
        Sampler rng(33);
        for (int trial = 0; trial < 60; ++trial) {
            ReducedWord w = random_indexed_word(rng, 1);
            TruncatedSeries s = magnus_expand(w, 3);
            CHECK(s.coefficient({}) == 1);
            CHECK(series_matches_naive(s, naive_magnus(w, 3)));
        }
    }
    SECTION("homomorphism and unit laws on random words") {
        Sampler rng(34);
        for (int trial = 0; trial < 60; ++trial) {
            ReducedWord u = random_indexed_word(rng, 2);
            ReducedWord v = random_indexed_word(rng, 2);
            CHECK(magnus_expand(multiply(u, v), 3) ==
                  series_multiply(magnus_expand(u, 3), magnus_expand(v, 3)));
            CHECK(magnus_expand(invert(u), 3) == unit_inverse(magnus_expand(u, 3)));
        }
    }
}

TEST_CASE("lowest term") {
    const Z2Order lex = Z2Order::lex();
    SECTION("within a degree the variable order decides") {
        TruncatedSeries s = TruncatedSeries::one(2);
        s.add({U, V}, 1);
        s.add({V, U}, -1);
        auto low = lowest_term(s, lex);
        REQUIRE(low.has_value());
        CHECK(low->first == Monomial{U, V});
        CHECK(low->second == 1);
    }
    SECTION("constant series has no lowest term") {
        CHECK(!lowest_term(TruncatedSeries::one(2), lex).has_value());
        CHECK(!lowest_term(TruncatedSeries(2), lex).has_value());
    }
    SECTION("a unique degree-1 term precedes all degree-2 terms") {
        TruncatedSeries s = TruncatedSeries::one(2);
        s.add({IndexPair{0, 1}}, -1);
        s.add({IndexPair{0, 0}, IndexPair{0, 1}}, 1);
        auto low = lowest_term(s, lex);
        REQUIRE(low.has_value());
        CHECK(low->first == Monomial{IndexPair{0, 1}});
        CHECK(low->second == -1);
    }
    SECTION("no stored nonconstant monomial compares below the reported one") {
        Sampler rng(35);
        for (int trial = 0; trial < 50; ++trial) {
            ReducedWord w = random_indexed_word(rng, 2);
            TruncatedSeries s = magnus_expand(w, 3);
            auto low = lowest_term(s, lex);
            if (!low) continue;
            for (const auto& [m, c] : s.terms()) {
                if (m.empty() || m == low->first) continue;
                bool below = false;
                if (m.size() < low->first.size()) below = true;
                if (m.size() == low->first.size())
                    for (std::size_t k = 0; k < m.size(); ++k) {
                        auto cm = lex.compare(m[k], low->first[k]);
                        if (cm != std::strong_ordering::equal) {
                            below = cm == std::strong_ordering::less;
                            break;
                        }
                    }
                CHECK(!below);
            }
        }
    }
}

TEST_CASE("debug print format") {
    ReducedWord comm = parse_word("x[0,0] x[1,0] x[0,0]^-1 x[1,0]^-1");
    CHECK(to_string(magnus_expand(comm, 2)) ==
          "1 + X[0,0]·X[1,0] - X[1,0]·X[0,0]");
    CHECK(to_string(TruncatedSeries(3)) == "0");
    TruncatedSeries s = TruncatedSeries::one(2);
    s.add({U}, 2);
    s.add({V}, -3);
    CHECK(to_string(s) == "1 + 2·X[0,0] - 3·X[1,0]");
    CHECK(to_string(magnus_expand(parse_word("x[0,0]^-1"), 2)) ==
          "1 - X[0,0] + X[0,0]·X[0,0]");
}
