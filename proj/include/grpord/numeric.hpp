#pragma once

// Exact arithmetic building blocks shared across the library: arbitrary
// precision integers/rationals, three-way sign values, and Z^2 index pairs.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace grpord {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when textual input (words, matrices, lattice points) is malformed.
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a word refers to a generator outside the declared set.
struct unknown_generator : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Three-way sign of a group element relative to a positive cone.
enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign opposite(Sign s) {
    return static_cast<Sign>(-static_cast<int>(s));
}

template <class Number>
Sign sign_of(const Number& value) {
    if (value > 0) return Sign::positive;
    if (value < 0) return Sign::negative;
    return Sign::zero;
}

/// Ordering of u against v given the cone sign of u^-1 v (positive means u < v).
inline std::strong_ordering ordering_from_difference_sign(Sign s) {
    switch (s) {
        case Sign::positive: return std::strong_ordering::less;
        case Sign::negative: return std::strong_ordering::greater;
        default: return std::strong_ordering::equal;
    }
}

inline Sign difference_sign_from_ordering(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return Sign::positive;
    if (o == std::strong_ordering::greater) return Sign::negative;
    return Sign::zero;
}

inline std::strong_ordering compare_ints(const Int& a, const Int& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// Generalized binomial coefficient C(n, k) for any integer n and k >= 0.
/// For negative n this is the coefficient in the binomial series of (1+X)^n.
inline Int binomial(const Int& n, unsigned k) {
    Int num = 1;
    Int den = 1;
    for (unsigned s = 0; s < k; ++s) {
        num *= n - s;
        den *= s + 1;
    }
    return num / den;  // always exact
}

/// Floor square root test; sets *root when n is a perfect square.
inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

/// A point of Z^2; doubles as the subscript of a Magnus variable X[i,j].
struct IndexPair {
    Int i;
    Int j;

    bool operator==(const IndexPair& other) const = default;

    IndexPair operator+(const IndexPair& o) const { return {i + o.i, j + o.j}; }
    IndexPair operator-(const IndexPair& o) const { return {i - o.i, j - o.j}; }
    IndexPair operator-() const { return {-i, -j}; }
    bool is_zero() const { return i == 0 && j == 0; }
};

/// Plain lexicographic comparison (first coordinate dominates).
inline std::strong_ordering lex_compare(const IndexPair& u, const IndexPair& v) {
    if (auto c = compare_ints(u.i, v.i); c != std::strong_ordering::equal) return c;
    return compare_ints(u.j, v.j);
}

inline std::string to_string(const IndexPair& p) {
    return "(" + p.i.str() + "," + p.j.str() + ")";
}

}  // namespace grpord
