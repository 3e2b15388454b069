#pragma once

// Exact elements p + q*sqrt(d) of a real quadratic field, with sign decisions
// made purely in rational arithmetic (compare p^2 against q^2 d, splitting on
// the signs of p and q). Perfect-square radicands collapse to rationals at
// construction, so q != 0 implies sqrt(d) is irrational.

#include <grpord/numeric.hpp>

#include <stdexcept>
#include <string>

namespace grpord {

class QuadNum {
public:
    QuadNum() = default;
    QuadNum(Rational p) : p_(std::move(p)) {}  // NOLINT: implicit by design
    QuadNum(Int p) : p_(Rational(std::move(p))) {}
    QuadNum(int p) : p_(Rational(p)) {}

    QuadNum(Rational p, Rational q, Int d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
        if (d_ < 0) throw std::domain_error("grpord: negative radicand");
        normalize();
    }

    const Rational& rational_part() const { return p_; }
    const Rational& radical_part() const { return q_; }
    const Int& radicand() const { return d_; }
    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }

    /// Galois conjugate p - q*sqrt(d).
    QuadNum conjugate() const { return QuadNum(p_, -q_, d_, already_normal{}); }

    Sign sign() const {
        if (q_ == 0) return sign_of(p_);
        if (p_ == 0) return sign_of(q_);
        if (p_ > 0 && q_ > 0) return Sign::positive;
        if (p_ < 0 && q_ < 0) return Sign::negative;
        // Opposite signs: |p| vs |q| sqrt(d); equality would force sqrt(d) rational.
        Rational lhs = p_ * p_;
        Rational rhs = q_ * q_ * d_;
        if (lhs == rhs) throw std::logic_error("grpord: nonsquare radicand produced zero");
        bool rational_dominates = lhs > rhs;
        return rational_dominates ? sign_of(p_) : sign_of(q_);
    }

    QuadNum operator-() const { return QuadNum(-p_, -q_, d_, already_normal{}); }

    QuadNum operator+(const QuadNum& o) const {
        Int d = joint_radicand(o);
        return QuadNum(p_ + o.p_, q_ + o.q_, d, already_normal{});
    }
    QuadNum operator-(const QuadNum& o) const { return *this + (-o); }

    QuadNum operator*(const QuadNum& o) const {
        Int d = joint_radicand(o);
        return QuadNum(p_ * o.p_ + q_ * o.q_ * d, p_ * o.q_ + q_ * o.p_, d, already_normal{});
    }

    QuadNum operator/(const QuadNum& o) const {
        if (o.is_zero()) throw std::domain_error("grpord: division by zero");
        Int d = joint_radicand(o);
        Rational norm = o.p_ * o.p_ - o.q_ * o.q_ * d;  // o * conj(o)
        QuadNum numer = *this * QuadNum(o.p_, -o.q_, d, already_normal{});
        return QuadNum(numer.p_ / norm, numer.q_ / norm, d, already_normal{});
    }

    bool operator==(const QuadNum& o) const { return p_ == o.p_ && q_ == o.q_; }

    std::strong_ordering operator<=>(const QuadNum& o) const {
        switch ((*this - o).sign()) {
            case Sign::negative: return std::strong_ordering::less;
            case Sign::positive: return std::strong_ordering::greater;
            default: return std::strong_ordering::equal;
        }
    }

    std::string str() const {
        if (q_ == 0) return p_.str();
        return p_.str() + " + (" + q_.str() + ")*sqrt(" + d_.str() + ")";
    }

private:
    struct already_normal {};
    QuadNum(Rational p, Rational q, Int d, already_normal)
        : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
        if (q_ == 0) d_ = 0;
    }

    void normalize() {
        Int root;
        if (q_ == 0) {
            d_ = 0;
        } else if (is_perfect_square(d_, &root)) {
            p_ += q_ * root;
            q_ = 0;
            d_ = 0;
        }
    }

    /// Values from distinct irrational fields cannot be mixed; rationals embed anywhere.
    Int joint_radicand(const QuadNum& o) const {
        if (q_ == 0) return o.d_;
        if (o.q_ == 0) return d_;
        if (d_ != o.d_) throw std::domain_error("grpord: mixed quadratic fields");
        return d_;
    }

    Rational p_;
    Rational q_;
    Int d_;
};

}  // namespace grpord
