#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace grpord;
using testutil::BigFloat;
using testutil::to_float;

namespace {

QuadNum random_quad(Sampler& rng, const Int& d) {
    Rational p(rng.uniform(-20, 20), rng.uniform(1, 9));
    Rational q(rng.uniform(-20, 20), rng.uniform(1, 9));
    return QuadNum(p, q, d);
}

/// Orders of the desk-scale catalog used for negative-verdict searches.
std::vector<Z2Order> order_catalog() {
    return {
        Z2Order::lex(),
        Z2Order::swapped_lex(),
        Z2Order::eigen(IntMatrix2{2, 1, 1, 1}),
        Z2Order::eigen(IntMatrix2{1, 1, 1, 2}),
        Z2Order::eigen(IntMatrix2{1, 1, 0, 1}),   // parabolic
        Z2Order::eigen_line(IntMatrix2{0, 1, 1, 1}),
    };
}

}  // namespace

TEST_CASE("quadratic field arithmetic") {
    SECTION("field axioms on random values of Q(sqrt(5))") {
        Sampler rng(41);
        for (int trial = 0; trial < 100; ++trial) {
            QuadNum x = random_quad(rng, 5), y = random_quad(rng, 5), z = random_quad(rng, 5);
            CHECK(x + y == y + x);
            CHECK((x + y) + z == x + (y + z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x - x == QuadNum(0));
            if (!y.is_zero()) CHECK((x / y) * y == x);
        }
    }
    SECTION("signs agree with 100-digit floating evaluation") {
        Sampler rng(42);
        for (int trial = 0; trial < 300; ++trial) {
            Int d = std::vector<Int>{2, 3, 5, 7, 13}[rng.below(5)];
            QuadNum x = random_quad(rng, d);
            BigFloat approx = to_float(x);
            Sign s = x.sign();
            if (approx > BigFloat("1e-50")) CHECK(s == Sign::positive);
            if (approx < BigFloat("-1e-50")) CHECK(s == Sign::negative);
            if (x.is_zero()) CHECK(s == Sign::zero);
        }
    }
    SECTION("perfect-square radicands collapse to rationals") {
        QuadNum x(Rational(1), Rational(2), 9);  // 1 + 2*3
        CHECK(x.is_rational());
        CHECK(x == QuadNum(7));
        CHECK(QuadNum(Rational(0), Rational(1), 4).sign() == Sign::positive);
    }
    SECTION("mixed fields refuse to combine") {
        QuadNum a(Rational(1), Rational(1), 2);
        QuadNum b(Rational(1), Rational(1), 3);
        CHECK_THROWS_AS(a + b, std::domain_error);
        CHECK_NOTHROW(a + QuadNum(3));  // rationals embed anywhere
    }
    SECTION("comparison is a total order consistent with floats") {
        Sampler rng(43);
        for (int trial = 0; trial < 100; ++trial) {
            QuadNum x = random_quad(rng, 7), y = random_quad(rng, 7);
            bool lt = (x <=> y) == std::strong_ordering::less;
            CHECK(lt == (to_float(x) < to_float(y)));
        }
    }
}

TEST_CASE("lexicographic order on Z^2") {
    CHECK(lex_compare(IndexPair{0, 0}, IndexPair{1, -5}) == std::strong_ordering::less);
    CHECK(lex_compare(IndexPair{2, 3}, IndexPair{2, 3}) == std::strong_ordering::equal);
    CHECK(lex_compare(IndexPair{0, 7}, IndexPair{1, 0}) == std::strong_ordering::less);

    SECTION("translation invariance") {
        Sampler rng(44);
        Z2Order lex = Z2Order::lex();
        for (int trial = 0; trial < 100; ++trial) {
            IndexPair u = random_point(rng, 30), v = random_point(rng, 30),
                      t = random_point(rng, 30);
            CHECK(lex.compare(u, v) == lex.compare(u + t, v + t));
            CHECK(lex_compare(u, v) == lex.compare(u, v));
        }
    }
}

TEST_CASE("eigenbasis cone signs") {
    const IntMatrix2 m{1, 1, 1, 2};

    SECTION("worked values in Q(sqrt(5))") {
        CHECK(eigen_sign(m, IndexPair{1, 0}) == Sign::positive);
        CHECK(eigen_sign(m, IndexPair{0, 0}) == Sign::zero);
        CHECK(eigen_sign(m, IndexPair{0, 1}) == Sign::negative);
    }
    SECTION("exact solve cross-check: v = c1 v1 + c2 v2 reproduces v") {
        // eigenbasis of 1,1;1,2: v1 = (1, (1+sqrt5)/2), v2 = (1, (1-sqrt5)/2)
        QuadNum half(Rational(1, 2));
        QuadNum root5(Rational(0), Rational(1), 5);
        QuadNum v1y = (QuadNum(1) + root5) * half;
        QuadNum v2y = (QuadNum(1) - root5) * half;
        Sampler rng(45);
        for (int trial = 0; trial < 100; ++trial) {
            IndexPair v = random_point(rng, 40);
            QuadNum denom = v2y - v1y;
            QuadNum c1 = (QuadNum(Rational(v.i)) * v2y - QuadNum(Rational(v.j))) / denom;
            QuadNum c2 = (QuadNum(Rational(v.j)) - QuadNum(Rational(v.i)) * v1y) / denom;
            CHECK(c1 + c2 == QuadNum(Rational(v.i)));
            CHECK(c1 * v1y + c2 * v2y == QuadNum(Rational(v.j)));
            Sign expected = c2.sign() != Sign::zero ? c2.sign() : c1.sign();
            if (v.is_zero()) expected = Sign::zero;
            CHECK(eigen_sign(m, v) == expected);
        }
    }
    SECTION("precondition violations") {
        CHECK_THROWS_AS(eigen_sign(IntMatrix2{0, -1, 1, 0}, IndexPair{1, 0}), std::domain_error);
        CHECK_THROWS_AS(eigen_sign(IntMatrix2{-2, 1, -1, 0}, IndexPair{1, 0}), std::domain_error);
        CHECK_THROWS_AS(eigen_sign(IntMatrix2{0, 1, 1, 1}, IndexPair{1, 0}), std::domain_error);
    }
    SECTION("cone defines a bi-order") {
        Sampler rng(46);
        Z2Order ord = Z2Order::eigen(m);
        for (int trial = 0; trial < 200; ++trial) {
            IndexPair v = random_point(rng, 25), w = random_point(rng, 25);
            if (!v.is_zero())
                CHECK(static_cast<int>(ord.sign(v)) == -static_cast<int>(ord.sign(-v)));
            if (ord.sign(v) == Sign::positive && ord.sign(w) == Sign::positive)
                CHECK(ord.sign(v + w) == Sign::positive);
        }
    }
}

TEST_CASE("invariant-order decision") {
    SECTION("worked verdicts") {
        CHECK(levitt_check(IntMatrix2{2, 1, 1, 1}).preserves);
        CHECK(!levitt_check(IntMatrix2{-1, 0, 0, -1}).preserves);
        CHECK(!levitt_check(IntMatrix2{1, -1, 1, 0}).preserves);
        CHECK(levitt_check(IntMatrix2::identity()).preserves);
    }
    SECTION("classification fields") {
        auto r = levitt_check(IntMatrix2{1, -1, 1, 0});
        CHECK(r.trace == 1);
        CHECK(r.det == 1);
        CHECK(r.discriminant == -3);
        CHECK(r.classification == EigenClass::complex_pair);
        CHECK(!r.order.has_value());

        CHECK(levitt_check(IntMatrix2{2, 1, 1, 1}).classification ==
              EigenClass::positive_real_pair);
        CHECK(levitt_check(IntMatrix2{-2, 1, 1, -1}).classification ==
              EigenClass::negative_real_pair);
        CHECK(levitt_check(IntMatrix2{1, 1, 0, 1}).classification == EigenClass::repeated);
        CHECK(levitt_check(IntMatrix2{0, 1, 1, 1}).classification == EigenClass::mixed_sign_pair);
    }
    SECTION("period-6 matrix really has order 6") {
        IntMatrix2 p{1, -1, 1, 0};
        IntMatrix2 acc = IntMatrix2::identity();
        for (int k = 0; k < 6; ++k) {
            acc = acc * p;
            if (k < 5) CHECK(!(acc == IntMatrix2::identity()));
        }
        CHECK(acc == IntMatrix2::identity());
    }
    SECTION("determinant -1: preserved exactly when trace is nonzero") {
        CHECK(levitt_check(IntMatrix2{0, 1, 1, 1}).preserves);   // trace 1
        CHECK(levitt_check(IntMatrix2{1, 1, 1, 0}).preserves);   // trace 1, det -1
        CHECK(!levitt_check(IntMatrix2{1, 0, 0, -1}).preserves); // reflection, trace 0
        CHECK(!levitt_check(IntMatrix2{0, 1, 1, 0}).preserves);  // swap, trace 0
    }
    SECTION("non-unimodular input is an error") {
        CHECK_THROWS_AS(levitt_check(IntMatrix2{2, 0, 0, 2}), std::domain_error);
    }
    SECTION("positive verdicts: constructed order is invariant under the matrix") {
        Sampler rng(47);
        for (const IntMatrix2& m :
             {IntMatrix2{2, 1, 1, 1}, IntMatrix2{1, 1, 1, 2}, IntMatrix2{1, 1, 0, 1},
              IntMatrix2{3, 1, 2, 1}, IntMatrix2{0, 1, 1, 1}, IntMatrix2{5, 2, 2, 1},
              IntMatrix2::identity()}) {
            auto r = levitt_check(m);
            REQUIRE(r.preserves);
            for (int trial = 0; trial < 200; ++trial) {
                IndexPair v = random_point(rng, 50);
                CHECK(r.order->sign(m.apply(v)) == r.order->sign(v));
            }
        }
    }
    SECTION("negative verdicts: every catalog order breaks within |coords| <= 10") {
        for (const IntMatrix2& m :
             {IntMatrix2{1, -1, 1, 0}, IntMatrix2{-1, 0, 0, -1}, IntMatrix2{0, -1, 1, 0},
              IntMatrix2{-2, 1, 1, -1}, IntMatrix2{0, 1, 1, 0}, IntMatrix2{1, 0, 0, -1}}) {
            REQUIRE(!levitt_check(m).preserves);
            for (const Z2Order& ord : order_catalog()) {
                bool violated = false;
                for (long i = -10; i <= 10 && !violated; ++i)
                    for (long j = -10; j <= 10 && !violated; ++j) {
                        IndexPair v{i, j};
                        if (v.is_zero()) continue;
                        violated = ord.sign(v) != ord.sign(m.apply(v));
                    }
                CHECK(violated);
            }
        }
    }
}
