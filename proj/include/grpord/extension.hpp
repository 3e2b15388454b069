#pragma once

// Order extension along a short exact sequence 1 -> F -> G -> H -> 1: the
// positive cone of G is the preimage of the positive cone of H together with
// the positive cone of F. The result is always left-invariant; it is
// bi-invariant only when both inputs are and the F-order is invariant under
// conjugation by all of G — a property no algorithm can check in general, so
// the caller asserts it and downstream property tests keep it honest.
//
// The Klein bottle group <x,y : xyx^-1 = y^-1> lives here as the standard
// example of an extension that is left-orderable but not bi-orderable.

#include <grpord/numeric.hpp>
#include <grpord/word.hpp>
#include <grpord/zn_order.hpp>

#include <functional>
#include <optional>
#include <stdexcept>

namespace grpord {

enum class Invariance { left_invariant, bi_invariant };

/// A three-way comparison obeying the group-order axioms, together with the
/// cone-membership sign it is derived from and the strongest invariance
/// contract claimed.
template <class Element>
struct OrderOracle {
    Invariance invariance = Invariance::left_invariant;
    std::function<Sign(const Element&)> sign;
    std::function<std::strong_ordering(const Element&, const Element&)> compare;

    static OrderOracle from_sign(std::function<Sign(const Element&)> sign_fn,
                                 std::function<Element(const Element&, const Element&)> difference,
                                 Invariance inv) {
        OrderOracle o;
        o.invariance = inv;
        o.sign = std::move(sign_fn);
        o.compare = [sign = o.sign, diff = std::move(difference)](const Element& u,
                                                                  const Element& v) {
            return ordering_from_difference_sign(sign(diff(u, v)));
        };
        return o;
    }
};

/// Data of a short exact sequence with ordered kernel and quotient.
template <class G, class H, class F>
struct ExtensionSpec {
    std::function<H(const G&)> projection;                 // homomorphism onto H
    std::function<std::optional<F>(const G&)> kernel_cast; // defined exactly on ker(projection)
    std::function<G(const G&, const G&)> difference;       // (u, v) -> u^-1 v
    OrderOracle<H> quotient_order;
    OrderOracle<F> kernel_order;
    /// Caller's assertion that the kernel order is invariant under
    /// conjugation by all of G (required for a bi-invariant result).
    bool kernel_conjugation_invariant = false;
};

/// The extension order: sign(g) is the quotient sign when nonzero, otherwise
/// the kernel sign of the cast.
template <class G, class H, class F>
OrderOracle<G> extend_order(const ExtensionSpec<G, H, F>& spec) {
    Invariance inv = (spec.quotient_order.invariance == Invariance::bi_invariant &&
                      spec.kernel_order.invariance == Invariance::bi_invariant &&
                      spec.kernel_conjugation_invariant)
                         ? Invariance::bi_invariant
                         : Invariance::left_invariant;
    auto sign_fn = [spec](const G& g) {
        Sign top = spec.quotient_order.sign(spec.projection(g));
        if (top != Sign::zero) return top;
        std::optional<F> f = spec.kernel_cast(g);
        if (!f)
            throw std::logic_error("grpord: kernel cast undefined on a projection-trivial element");
        return spec.kernel_order.sign(*f);
    };
    return OrderOracle<G>::from_sign(std::move(sign_fn), spec.difference, inv);
}

/// The natural bi-order of Z as an oracle.
inline OrderOracle<Int> int_order() {
    return OrderOracle<Int>::from_sign([](const Int& n) { return sign_of(n); },
                                       [](const Int& u, const Int& v) { return Int(v - u); },
                                       Invariance::bi_invariant);
}

/// A Z^2 cone order as an oracle (all such orders are bi-invariant).
inline OrderOracle<IndexPair> z2_oracle(const Z2Order& ord) {
    return OrderOracle<IndexPair>::from_sign(
        [ord](const IndexPair& v) { return ord.sign(v); },
        [](const IndexPair& u, const IndexPair& v) { return v - u; }, Invariance::bi_invariant);
}

// ---------------------------------------------------------------------------
// Klein bottle group K = <x, y : xyx^-1 = y^-1>.
//
// Every element has a unique normal form x^m y^n; the relation gives the
// multiplication law (x^m y^n)(x^m' y^n') = x^(m+m') y^((-1)^m' n + n').

struct KleinElement {
    Int m;  // x-exponent
    Int n;  // y-exponent

    bool operator==(const KleinElement& o) const = default;
};

inline KleinElement klein_multiply(const KleinElement& u, const KleinElement& v) {
    Int flipped = (v.m % 2 == 0) ? u.n : -u.n;
    return {u.m + v.m, flipped + v.n};
}

inline KleinElement klein_invert(const KleinElement& u) {
    // (x^m y^n)^-1 = x^-m y^((-1)^(m+1) n)
    Int n = (u.m % 2 == 0) ? -u.n : u.n;
    return {-u.m, n};
}

/// Normal form of a word over {x, y}.
inline KleinElement klein_normal_form(const ReducedWord& w) {
    KleinElement acc{0, 0};
    for (const auto& s : w.syllables()) {
        if (s.gen == GenLabel::named('x'))
            acc = klein_multiply(acc, KleinElement{s.exp, 0});
        else if (s.gen == GenLabel::named('y'))
            acc = klein_multiply(acc, KleinElement{0, s.exp});
        else
            throw unknown_generator("grpord: Klein bottle words use generators x and y");
    }
    return acc;
}

/// Left-invariant (not bi-invariant) order on K, extended from the
/// x-exponent quotient Z with kernel <y> = Z.
inline OrderOracle<KleinElement> klein_order() {
    ExtensionSpec<KleinElement, Int, Int> spec;
    spec.projection = [](const KleinElement& g) { return g.m; };
    spec.kernel_cast = [](const KleinElement& g) -> std::optional<Int> {
        if (g.m != 0) return std::nullopt;
        return g.n;
    };
    spec.difference = [](const KleinElement& u, const KleinElement& v) {
        return klein_multiply(klein_invert(u), v);
    };
    spec.quotient_order = int_order();
    spec.kernel_order = int_order();
    spec.kernel_conjugation_invariant = false;  // x y x^-1 = y^-1 flips the kernel cone
    return extend_order(spec);
}

inline std::strong_ordering klein_compare(const ReducedWord& u, const ReducedWord& v) {
    static const OrderOracle<KleinElement> oracle = klein_order();
    return oracle.compare(klein_normal_form(u), klein_normal_form(v));
}

}  // namespace grpord
