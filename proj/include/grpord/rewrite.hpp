#pragma once

// Left-to-right rewriting of words into kernel-normal form over the
// transversal {a^m b^n}. The ambient group has generators a, b (and in the
// surface case c), with a normal free kernel generated by
//
//     x[i,j] = a^i b^j g0 b^-j a^-i,
//
// where g0 is the kernel generator at the origin (c, respectively the
// commutator [a,b]) and the defining relation identifies [a,b] = x[0,0]^r:
// r = 2 for the surface group <a,b,c : aba^-1b^-1 = c^2>, r = 1 when the
// kernel is the commutator subgroup of the free group on a, b itself.
//
// The scanner maintains (m, n, f) with the invariant
//
//     element scanned so far = f * a^m * b^n,     f a word in the x[i,j].
//
// Appending b^e is free. Appending the kernel generator at the current
// position contributes the literal letter x[m,n]. Appending a single a^{+-1}
// contributes the commutator [b^n, a^{+-1}] conjugated into position, which
// expands to a run of x[*, t]^{+-r} letters:
//
//     f a^m b^n a    = f * K  * a^(m+1) b^n,  K  = a^m [b^n, a] a^-m
//     f a^m b^n a^-1 = f * K' * a^(m-1) b^n,  K' = a^(m-1) [b^n, a]^-1 a^(1-m)
//
// with [b^n, a] = x[0,n-1]^-r ... x[0,0]^-r for n > 0 and
// [b^n, a] = x[0,n]^r ... x[0,-1]^r for n < 0 (empty for n = 0).
//
// Appending a kernel letter x[i,j] away from the current position uses the
// conjugation action of the transversal on the basis:
//
//     a   x[i,j] a^-1  = x[i+1,j]
//     b   x[i,j] b^-1  = T_i x[i,j+1] T_i^-1,  T_i = [b, a^i]
//     b^-1 x[i,j] b    = U_i x[i,j-1] U_i^-1,  U_i = [b^-1, a^i]
//
// where T_i and U_i are themselves explicit x-words:
//
//     T_i = x[0,0]^-r ... x[i-1,0]^-r   (i > 0),   x[-1,0]^r ... x[i,0]^r   (i < 0)
//     U_i = x[0,-1]^r ... x[i-1,-1]^r   (i > 0),   x[-1,-1]^-r ... x[i,-1]^-r (i < 0)
//
// All identities are forced by the defining relation; the relator-insertion
// and substitution round-trip tests are the arbiter that the derivation is
// right.

#include <grpord/numeric.hpp>
#include <grpord/word.hpp>

#include <stdexcept>
#include <vector>

namespace grpord {

class TransversalRewriter {
public:
    explicit TransversalRewriter(int relator_exponent) : rho_(relator_exponent) {}

    const Int& a_exponent() const { return m_; }
    const Int& b_exponent() const { return n_; }

    ReducedWord kernel_part() const { return ReducedWord::reduce(f_.current()); }

    void append_b(const Int& exp) { n_ += exp; }

    /// The kernel generator at the current transversal position: c-letters in
    /// the surface group contribute x[m,n] directly.
    void append_kernel_generator(const Int& exp) { push(x_label(m_, n_), exp); }

    void append_a(const Int& exp) {
        if (n_ == 0) {  // commutator junk vanishes; whole runs are free
            m_ += exp;
            return;
        }
        for (Int step = 0; step < boost::multiprecision::abs(exp); ++step)
            exp > 0 ? append_a_letter() : append_a_inverse_letter();
    }

    /// Appends a kernel basis letter x[i,j]^e: conjugate it through b^n and
    /// a^m into the position of the current transversal state.
    void append_x(const IndexPair& idx, const Int& exp) {
        std::vector<Syllable> word{Syllable{x_label(idx.i, idx.j), exp}};
        Int steps = boost::multiprecision::abs(n_);
        for (Int s = 0; s < steps; ++s)
            word = n_ > 0 ? conj_b(word, rho_) : conj_b_inverse(word, rho_);
        for (auto& syl : word) {
            syl.gen.index.i += m_;
            push(syl.gen, syl.exp);
        }
    }

    /// Dispatches one syllable of an input word. allow_c admits the surface
    /// generator c; x[i,j] letters are admitted either way.
    void append_syllable(const Syllable& s, bool allow_c) {
        if (s.gen.has_index) {
            if (s.gen.name != 'x')
                throw unknown_generator("grpord: indexed generators are spelled x[i,j]");
            append_x(s.gen.index, s.exp);
        } else if (s.gen.name == 'a') {
            append_a(s.exp);
        } else if (s.gen.name == 'b') {
            append_b(s.exp);
        } else if (s.gen.name == 'c' && allow_c) {
            append_kernel_generator(s.exp);
        } else {
            throw unknown_generator("grpord: generator outside this group's alphabet");
        }
    }

    void append_word(const ReducedWord& w, bool allow_c) {
        for (const auto& s : w.syllables()) append_syllable(s, allow_c);
    }

    // Conjugation of an x-word by b or b^-1, applied letterwise through the
    // basis action above. Exposed for direct testing against the defining
    // relation.
    static std::vector<Syllable> conj_b(const std::vector<Syllable>& word, int rho) {
        WordBuilder out;
        for (const auto& syl : word) {
            const IndexPair& idx = syl.gen.index;
            emit_t(out, idx.i, rho, false);
            out.push(x_label(idx.i, idx.j + 1), syl.exp);
            emit_t(out, idx.i, rho, true);
        }
        return out.take();
    }

    static std::vector<Syllable> conj_b_inverse(const std::vector<Syllable>& word, int rho) {
        WordBuilder out;
        for (const auto& syl : word) {
            const IndexPair& idx = syl.gen.index;
            emit_u(out, idx.i, rho, false);
            out.push(x_label(idx.i, idx.j - 1), syl.exp);
            emit_u(out, idx.i, rho, true);
        }
        return out.take();
    }

private:
    static GenLabel x_label(Int i, Int j) {
        return GenLabel::indexed('x', std::move(i), std::move(j));
    }

    // WordBuilder cancels at every seam, so f_ stays reduced throughout.
    void push(const GenLabel& g, const Int& e) { f_.push(g, e); }

    void append_a_letter() {
        if (n_ > 0)
            for (Int t = n_ - 1; t >= 0; --t) push(x_label(m_, t), -rho_);
        else
            for (Int t = n_; t <= -1; ++t) push(x_label(m_, t), rho_);
        m_ += 1;
    }

    void append_a_inverse_letter() {
        if (n_ > 0)
            for (Int t = 0; t <= n_ - 1; ++t) push(x_label(m_ - 1, t), rho_);
        else
            for (Int t = -1; t >= n_; --t) push(x_label(m_ - 1, t), -rho_);
        m_ -= 1;
    }

    /// T_i (or its inverse) into the builder.
    static void emit_t(WordBuilder& out, const Int& i, int rho, bool inverse) {
        int e = inverse ? rho : -rho;
        if (i > 0) {
            if (!inverse)
                for (Int k = 0; k < i; ++k) out.push(x_label(k, 0), e);
            else
                for (Int k = i - 1; k >= 0; --k) out.push(x_label(k, 0), e);
        } else if (i < 0) {
            if (!inverse)
                for (Int k = -1; k >= i; --k) out.push(x_label(k, 0), -e);
            else
                for (Int k = i; k <= -1; ++k) out.push(x_label(k, 0), -e);
        }
    }

    /// U_i (or its inverse) into the builder.
    static void emit_u(WordBuilder& out, const Int& i, int rho, bool inverse) {
        int e = inverse ? -rho : rho;
        if (i > 0) {
            if (!inverse)
                for (Int k = 0; k < i; ++k) out.push(x_label(k, -1), e);
            else
                for (Int k = i - 1; k >= 0; --k) out.push(x_label(k, -1), e);
        } else if (i < 0) {
            if (!inverse)
                for (Int k = -1; k >= i; --k) out.push(x_label(k, -1), -e);
            else
                for (Int k = i; k <= -1; ++k) out.push(x_label(k, -1), -e);
        }
    }

    int rho_;
    Int m_;
    Int n_;
    WordBuilder f_;
};

}  // namespace grpord
