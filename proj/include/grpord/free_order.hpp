#pragma once

// Bi-ordering of free groups via the Magnus expansion: a nonidentity word is
// positive exactly when the coefficient of the lowest nonconstant term of its
// expansion is positive, where terms are ranked by degree and then by the
// pluggable variable order on Z^2 subscripts. The lowest nonvanishing degree
// of mu(w) - 1 is the lower-central-series weight of w, which never exceeds
// the letter length, so the truncation degree escalates at most that far.

#include <grpord/extension.hpp>
#include <grpord/numeric.hpp>
#include <grpord/series.hpp>
#include <grpord/word.hpp>
#include <grpord/zn_order.hpp>

#include <stdexcept>

namespace grpord {

/// Variable-order strategy on Z^2 subscripts; LEX or an eigenbasis order.
using IndexOrder = Z2Order;

/// Canonical embedding of the named alphabet into the Z^2-indexed family:
/// a,b,c,t,x,y go to (0,0),(1,0),...,(5,0); x[i,j] is its own subscript.
inline IndexPair standard_variable(const GenLabel& g) {
    if (g.has_index) return g.index;
    static constexpr char alphabet[] = {'a', 'b', 'c', 't', 'x', 'y'};
    for (int k = 0; k < 6; ++k)
        if (alphabet[k] == g.name) return IndexPair{k, 0};
    throw unknown_generator("grpord: no Magnus variable for this generator");
}

inline TruncatedSeries magnus_expand(const ReducedWord& w, int degree_bound) {
    return magnus_expand(w, degree_bound, standard_variable);
}

/// Rewrites named generators as their indexed aliases (a -> x[0,0] and so
/// on), so that words from both spellings live in one free group.
inline ReducedWord to_indexed(const ReducedWord& w) {
    std::vector<Syllable> out;
    out.reserve(w.syllable_count());
    for (const auto& s : w.syllables())
        out.push_back(Syllable{GenLabel::indexed('x', standard_variable(s.gen).i,
                                                 standard_variable(s.gen).j),
                               s.exp});
    return ReducedWord::reduce(out);
}

/// Cone sign of w in the Magnus bi-order of the free group under ord.
inline Sign magnus_sign(const ReducedWord& w, const IndexOrder& ord) {
    if (w.is_identity()) return Sign::zero;
    Int cap = w.letter_length();
    for (int degree = 1; degree <= cap; ++degree) {
        TruncatedSeries s = magnus_expand(w, degree);
        if (auto low = lowest_term(s, ord)) return sign_of(low->second);
    }
    throw std::logic_error(
        "grpord: Magnus expansion of a nonidentity word vanished through its letter length");
}

/// Ordering of u against v: the sign of u^-1 v, a single lowest-term read.
inline std::strong_ordering magnus_compare(const ReducedWord& u, const ReducedWord& v,
                                           const IndexOrder& ord) {
    return ordering_from_difference_sign(magnus_sign(multiply(invert(u), v), ord));
}

/// Relabels every indexed generator x[i,j] to x[i+di, j+dj].
inline ReducedWord shift_indices(const ReducedWord& w, const Int& di, const Int& dj) {
    std::vector<Syllable> out;
    out.reserve(w.syllable_count());
    for (const auto& s : w.syllables()) {
        GenLabel g = s.gen;
        if (g.has_index) {
            g.index.i += di;
            g.index.j += dj;
        }
        out.push_back(Syllable{g, s.exp});
    }
    return ReducedWord::reduce(out);
}

/// The Magnus bi-order of the free group as an oracle over reduced words.
inline OrderOracle<ReducedWord> magnus_oracle(const IndexOrder& ord) {
    return OrderOracle<ReducedWord>::from_sign(
        [ord](const ReducedWord& w) { return magnus_sign(w, ord); },
        [](const ReducedWord& u, const ReducedWord& v) { return multiply(invert(u), v); },
        Invariance::bi_invariant);
}

/// Relabels every indexed generator x[i,j] to x[M(i,j)].
inline ReducedWord permute_indices(const ReducedWord& w, const IntMatrix2& m) {
    std::vector<Syllable> out;
    out.reserve(w.syllable_count());
    for (const auto& s : w.syllables()) {
        GenLabel g = s.gen;
        if (g.has_index) g.index = m.apply(g.index);
        out.push_back(Syllable{g, s.exp});
    }
    return ReducedWord::reduce(out);
}

}  // namespace grpord
