#pragma once

// Bi-orderings of Z^2 and the decision procedure for automorphism-invariant
// ones. An integer matrix of determinant +-1 preserves some bi-order of Z^2
// exactly when the span of its Jordan vectors for negative or complex
// eigenvalues meets the lattice only at the origin; for n = 2 this reduces to
// an exact case analysis on trace and determinant, carried out in quadratic
// field arithmetic. Positive verdicts come with a concrete order:
//
//   det = +1, trace >= 2:  cone in the eigenbasis (v1 for the larger
//       eigenvalue, v2 the second Jordan vector): z = c1 v1 + c2 v2 is
//       positive iff c2 > 0, or c2 = 0 and c1 > 0.
//   det = -1, trace != 0:  the negative eigenline has irrational slope and
//       misses the lattice, so the sign of the expanding coordinate alone
//       splits Z^2 \ {0}.

#include <grpord/numeric.hpp>
#include <grpord/quadnum.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace grpord {

/// 2x2 integer matrix, rows (m11 m12; m21 m22), acting on column vectors.
struct IntMatrix2 {
    Int m11, m12, m21, m22;

    Int det() const { return m11 * m22 - m12 * m21; }
    Int trace() const { return m11 + m22; }

    IndexPair apply(const IndexPair& v) const {
        return {m11 * v.i + m12 * v.j, m21 * v.i + m22 * v.j};
    }

    IntMatrix2 operator*(const IntMatrix2& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }

    bool operator==(const IntMatrix2& o) const = default;

    std::string str() const {
        return m11.str() + "," + m12.str() + ";" + m21.str() + "," + m22.str();
    }
};

namespace detail {

struct QuadVec {
    QuadNum x, y;
};

/// Cached basis for cone signs: z = c1 v1 + c2 v2 solved by Cramer's rule.
struct EigenFrame {
    QuadVec v1, v2;
    QuadNum denom;  // det [v1 v2], nonzero

    void solve(const IndexPair& z, QuadNum* c1, QuadNum* c2) const {
        QuadNum zx{Rational(z.i)};
        QuadNum zy{Rational(z.j)};
        *c1 = (zx * v2.y - zy * v2.x) / denom;
        *c2 = (v1.x * zy - v1.y * zx) / denom;
    }
};

/// An eigenvector of M for eigenvalue lambda, in exact coordinates.
inline QuadVec eigenvector(const IntMatrix2& m, const QuadNum& lambda) {
    if (m.m12 != 0) return {QuadNum(Rational(m.m12)), lambda - QuadNum(Rational(m.m11))};
    if (m.m21 != 0) return {lambda - QuadNum(Rational(m.m22)), QuadNum(Rational(m.m21))};
    // diagonal: eigenvalues are the diagonal entries themselves
    if (lambda == QuadNum(Rational(m.m11))) return {QuadNum(1), QuadNum(0)};
    return {QuadNum(0), QuadNum(1)};
}

/// Primitive integer kernel vector of the rank-1 matrix M - I (parabolic case).
inline IndexPair parabolic_eigenvector(const IntMatrix2& m) {
    Int p = m.m11 - 1, q = m.m12;
    if (p == 0 && q == 0) {
        p = m.m21;
        q = m.m22 - 1;
    }
    IndexPair v{-q, p};
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(v.i),
                                       boost::multiprecision::abs(v.j));
    if (g > 1) {
        v.i /= g;
        v.j /= g;
    }
    if (v.i < 0 || (v.i == 0 && v.j < 0)) v = -v;
    return v;
}

inline EigenFrame eigen_cone_frame(const IntMatrix2& m) {
    EigenFrame f;
    Int disc = m.trace() * m.trace() - 4;
    if (m == IntMatrix2::identity()) {
        f.v1 = {QuadNum(1), QuadNum(0)};
        f.v2 = {QuadNum(0), QuadNum(1)};
    } else if (disc == 0) {
        // parabolic: eigenvector plus any complementary vector serves as a
        // Jordan frame (the c2 coordinate is preserved exactly by M)
        IndexPair v1 = parabolic_eigenvector(m);
        f.v1 = {QuadNum(Rational(v1.i)), QuadNum(Rational(v1.j))};
        f.v2 = (v1.i != 0) ? QuadVec{QuadNum(0), QuadNum(1)} : QuadVec{QuadNum(1), QuadNum(0)};
    } else {
        QuadNum root(Rational(0), Rational(1), disc);  // sqrt(disc), exact
        QuadNum half(Rational(1, 2));
        QuadNum tr{Rational(m.trace())};
        QuadNum lambda1 = (tr + root) * half;
        QuadNum lambda2 = (tr - root) * half;
        f.v1 = eigenvector(m, lambda1);
        f.v2 = eigenvector(m, lambda2);
    }
    f.denom = f.v1.x * f.v2.y - f.v1.y * f.v2.x;
    if (f.denom.is_zero()) throw std::logic_error("grpord: degenerate eigenframe");
    return f;
}

inline EigenFrame eigen_line_frame(const IntMatrix2& m) {
    Int disc = m.trace() * m.trace() + 4;  // positive, never a perfect square for trace != 0
    QuadNum root(Rational(0), Rational(1), disc);
    QuadNum half(Rational(1, 2));
    QuadNum tr{Rational(m.trace())};
    EigenFrame f;
    f.v1 = eigenvector(m, (tr + root) * half);  // expanding direction, eigenvalue > 0
    f.v2 = eigenvector(m, (tr - root) * half);  // negative eigenline
    f.denom = f.v1.x * f.v2.y - f.v1.y * f.v2.x;
    if (f.denom.is_zero()) throw std::logic_error("grpord: degenerate eigenframe");
    return f;
}

}  // namespace detail

/// A bi-invariant total order of Z^2, given by its positive cone.
class Z2Order {
public:
    enum class Kind { lex, swapped_lex, eigen_cone, eigen_line };

    static Z2Order lex() { return Z2Order(Kind::lex); }

    static Z2Order swapped_lex() { return Z2Order(Kind::swapped_lex); }

    /// Eigenbasis cone of a determinant-1 matrix with trace >= 2.
    static Z2Order eigen(const IntMatrix2& m) {
        if (m.det() != 1)
            throw std::domain_error("grpord: eigen order requires determinant 1");
        if (m.trace() < 2)
            throw std::domain_error("grpord: eigen order requires trace >= 2");
        Z2Order o(Kind::eigen_cone);
        o.matrix_ = m;
        o.frame_ = detail::eigen_cone_frame(m);
        return o;
    }

    /// Expanding-coordinate cone of a determinant -1 matrix with trace != 0.
    static Z2Order eigen_line(const IntMatrix2& m) {
        if (m.det() != -1)
            throw std::domain_error("grpord: eigenline order requires determinant -1");
        if (m.trace() == 0)
            throw std::domain_error("grpord: trace 0 leaves a rational eigenline");
        Z2Order o(Kind::eigen_line);
        o.matrix_ = m;
        o.frame_ = detail::eigen_line_frame(m);
        return o;
    }

    Sign sign(const IndexPair& v) const {
        switch (kind_) {
            case Kind::lex:
                return v.i != 0 ? sign_of(v.i) : sign_of(v.j);
            case Kind::swapped_lex:
                return v.j != 0 ? sign_of(v.j) : sign_of(v.i);
            case Kind::eigen_cone: {
                if (v.is_zero()) return Sign::zero;
                QuadNum c1, c2;
                frame_->solve(v, &c1, &c2);
                Sign s2 = c2.sign();
                return s2 != Sign::zero ? s2 : c1.sign();
            }
            case Kind::eigen_line: {
                if (v.is_zero()) return Sign::zero;
                QuadNum c1, c2;
                frame_->solve(v, &c1, &c2);
                Sign s = c1.sign();
                if (s == Sign::zero)
                    throw std::logic_error("grpord: lattice point on irrational eigenline");
                return s;
            }
        }
        return Sign::zero;
    }

    std::strong_ordering compare(const IndexPair& u, const IndexPair& v) const {
        return ordering_from_difference_sign(sign(v - u));
    }

    Kind kind() const { return kind_; }
    const std::optional<IntMatrix2>& matrix() const { return matrix_; }

    std::string describe() const {
        switch (kind_) {
            case Kind::lex: return "lex";
            case Kind::swapped_lex: return "swapped-lex";
            case Kind::eigen_cone: return "eigen(" + matrix_->str() + ")";
            case Kind::eigen_line: return "eigenline(" + matrix_->str() + ")";
        }
        return "?";
    }

private:
    explicit Z2Order(Kind k) : kind_(k) {}

    Kind kind_;
    std::optional<IntMatrix2> matrix_;
    std::optional<detail::EigenFrame> frame_;
};

/// Sign of v under the eigenbasis cone of m (determinant 1, trace >= 2).
inline Sign eigen_sign(const IntMatrix2& m, const IndexPair& v) {
    return Z2Order::eigen(m).sign(v);
}

enum class EigenClass {
    positive_real_pair,
    negative_real_pair,
    mixed_sign_pair,
    complex_pair,
    repeated,
};

inline std::string to_string(EigenClass c) {
    switch (c) {
        case EigenClass::positive_real_pair: return "positive-real-pair";
        case EigenClass::negative_real_pair: return "negative-real-pair";
        case EigenClass::mixed_sign_pair: return "mixed-sign-pair";
        case EigenClass::complex_pair: return "complex-pair";
        case EigenClass::repeated: return "repeated";
    }
    return "?";
}

/// Outcome of the invariant-order decision for a matrix.
struct LevittReport {
    bool preserves = false;
    Int trace;
    Int det;
    Int discriminant;  // trace^2 - 4 det
    EigenClass classification = EigenClass::complex_pair;
    std::optional<Z2Order> order;  // a concrete invariant order when preserves
};

/// Decides whether m preserves some bi-ordering of Z^2 and constructs one on
/// a positive verdict. Requires determinant +-1.
inline LevittReport levitt_check(const IntMatrix2& m) {
    Int det = m.det();
    if (det != 1 && det != -1)
        throw std::domain_error("grpord: matrix must have determinant +-1");

    LevittReport r;
    r.trace = m.trace();
    r.det = det;
    r.discriminant = r.trace * r.trace - 4 * det;

    if (det == 1) {
        if (r.trace > 2)
            r.classification = EigenClass::positive_real_pair;
        else if (r.trace < -2)
            r.classification = EigenClass::negative_real_pair;
        else if (r.trace == 2 || r.trace == -2)
            r.classification = EigenClass::repeated;
        else
            r.classification = EigenClass::complex_pair;
        r.preserves = r.trace >= 2;  // both eigenvalues positive, possibly equal
        if (r.preserves) r.order = Z2Order::eigen(m);
    } else {
        r.classification = EigenClass::mixed_sign_pair;
        // The negative eigenline meets the lattice iff the eigenvalues are
        // rational iff trace^2 + 4 is a perfect square iff trace = 0.
        r.preserves = r.trace != 0;
        if (r.preserves) r.order = Z2Order::eigen_line(m);
    }
    return r;
}

}  // namespace grpord
