#pragma once

// Free-group word algebra over labelled generators: free reduction,
// multiplication, inversion, conjugation, exponent sums and endomorphism
// application. Words are immutable once built; every operation returns the
// canonical freely reduced form.

#include <grpord/numeric.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace grpord {

/// A generator symbol: either a bare name from {a,b,c,t,x,y} or an indexed
/// family member name[i,j] with (i,j) in Z^2 (x[i,j] in practice).
struct GenLabel {
    char name = 'a';
    bool has_index = false;
    IndexPair index{};

    static GenLabel named(char n) { return GenLabel{n, false, {}}; }
    static GenLabel indexed(char n, Int i, Int j) {
        return GenLabel{n, true, {std::move(i), std::move(j)}};
    }

    bool operator==(const GenLabel& other) const {
        return name == other.name && has_index == other.has_index &&
               (!has_index || index == other.index);
    }
};

/// Name-then-(i,j) comparison. Used for canonical storage and printing only;
/// order semantics on generators live elsewhere.
inline std::strong_ordering label_print_order(const GenLabel& u, const GenLabel& v) {
    if (u.name != v.name) return u.name <=> v.name;
    if (u.has_index != v.has_index)
        return u.has_index ? std::strong_ordering::greater : std::strong_ordering::less;
    if (!u.has_index) return std::strong_ordering::equal;
    return lex_compare(u.index, v.index);
}

struct LabelLess {
    bool operator()(const GenLabel& u, const GenLabel& v) const {
        return label_print_order(u, v) == std::strong_ordering::less;
    }
};

/// One run of a reduced word: generator raised to a nonzero power.
struct Syllable {
    GenLabel gen;
    Int exp;

    bool operator==(const Syllable& other) const = default;
};

/// Appends syllables while maintaining free reduction: adjacent runs of the
/// same generator merge, zero runs vanish and cancellation cascades.
class WordBuilder {
public:
    void push(const GenLabel& gen, const Int& exp) {
        if (exp == 0) return;
        if (!syls_.empty() && syls_.back().gen == gen) {
            syls_.back().exp += exp;
            if (syls_.back().exp == 0) syls_.pop_back();
            return;
        }
        syls_.push_back(Syllable{gen, exp});
    }

    void push(const Syllable& s) { push(s.gen, s.exp); }

    void append(std::span<const Syllable> tail) {
        for (const auto& s : tail) push(s);
    }

    const std::vector<Syllable>& current() const { return syls_; }

    std::vector<Syllable> take() { return std::move(syls_); }

private:
    std::vector<Syllable> syls_;
};

/// A freely reduced word. The empty word is the group identity.
class ReducedWord {
public:
    ReducedWord() = default;

    /// Canonical form of an arbitrary syllable sequence.
    static ReducedWord reduce(std::span<const Syllable> raw) {
        WordBuilder b;
        b.append(raw);
        return ReducedWord(b.take());
    }

    static ReducedWord reduce(const std::vector<Syllable>& raw) {
        return reduce(std::span<const Syllable>(raw));
    }

    static ReducedWord generator(GenLabel g, Int exp = 1) {
        WordBuilder b;
        b.push(g, exp);
        return ReducedWord(b.take());
    }

    const std::vector<Syllable>& syllables() const { return syls_; }
    bool is_identity() const { return syls_.empty(); }
    std::size_t syllable_count() const { return syls_.size(); }

    /// Letter length |w|: the sum of absolute syllable exponents.
    Int letter_length() const {
        Int n = 0;
        for (const auto& s : syls_) n += boost::multiprecision::abs(s.exp);
        return n;
    }

    bool operator==(const ReducedWord& other) const = default;

private:
    friend class WordBuilder;
    explicit ReducedWord(std::vector<Syllable> syls) : syls_(std::move(syls)) {}

    std::vector<Syllable> syls_;

    friend ReducedWord multiply(const ReducedWord&, const ReducedWord&);
    friend ReducedWord invert(const ReducedWord&);
    friend ReducedWord pow(const ReducedWord&, const Int&);
};

inline ReducedWord multiply(const ReducedWord& u, const ReducedWord& v) {
    WordBuilder b;
    b.append(u.syllables());
    b.append(v.syllables());
    return ReducedWord(b.take());
}

inline ReducedWord invert(const ReducedWord& w) {
    std::vector<Syllable> out;
    out.reserve(w.syllable_count());
    for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
        out.push_back(Syllable{it->gen, -it->exp});
    return ReducedWord(std::move(out));  // reversal of a reduced word stays reduced
}

/// g w g^-1.
inline ReducedWord conjugate(const ReducedWord& g, const ReducedWord& w) {
    return multiply(multiply(g, w), invert(g));
}

/// w^k. Single-syllable cores stay compact for any k; otherwise the result is
/// materialized syllable by syllable, so k must fit in memory.
inline ReducedWord pow(const ReducedWord& w, const Int& k) {
    if (k == 0 || w.is_identity()) return ReducedWord{};
    if (k < 0) return pow(invert(w), -k);

    // Cyclic decomposition w = s * core * s^-1 with the core cyclically reduced.
    std::vector<Syllable> core(w.syllables());
    std::vector<Syllable> s;
    while (core.size() >= 3 && core.front().gen == core.back().gen) {
        Syllable front = core.front();
        Int merged = front.exp + core.back().exp;
        s.push_back(front);
        core.erase(core.begin());
        core.pop_back();
        if (merged != 0) {
            // w = g^f M g^b = g^f (M g^(b+f)) g^-f with the merged run at the end
            core.push_back(Syllable{front.gen, merged});
            break;
        }
    }

    std::vector<Syllable> powered;
    if (core.size() == 1) {
        powered.push_back(Syllable{core.front().gen, core.front().exp * k});
    } else {
        if (k > std::numeric_limits<std::size_t>::max() / core.size())
            throw std::length_error("grpord: word power too large to materialize");
        std::size_t reps = static_cast<std::size_t>(k);
        powered.reserve(core.size() * reps);
        for (std::size_t r = 0; r < reps; ++r)
            powered.insert(powered.end(), core.begin(), core.end());
        // cyclically reduced core with distinct end labels: seams stay reduced
    }

    WordBuilder out;
    out.append(s);
    out.append(powered);
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.push(it->gen, -it->exp);
    return ReducedWord::reduce(out.take());
}

/// Sum of exponents of syllables labelled g; a homomorphism to Z per generator.
inline Int exponent_sum(const ReducedWord& w, const GenLabel& g) {
    Int total = 0;
    for (const auto& s : w.syllables())
        if (s.gen == g) total += s.exp;
    return total;
}

inline Int exponent_sum(const ReducedWord& w, char name) {
    return exponent_sum(w, GenLabel::named(name));
}

/// A finite mapping generator -> word over a declared generating set.
class Endomorphism {
public:
    Endomorphism() = default;

    void set_image(const GenLabel& g, ReducedWord image) { images_[g] = std::move(image); }

    const ReducedWord& image_of(const GenLabel& g) const {
        auto it = images_.find(g);
        if (it == images_.end())
            throw unknown_generator("grpord: generator has no image under this endomorphism");
        return it->second;
    }

    bool defines(const GenLabel& g) const { return images_.count(g) != 0; }

    const std::map<GenLabel, ReducedWord, LabelLess>& images() const { return images_; }

    static Endomorphism identity_on(std::span<const GenLabel> gens) {
        Endomorphism e;
        for (const auto& g : gens) e.set_image(g, ReducedWord::generator(g));
        return e;
    }

private:
    std::map<GenLabel, ReducedWord, LabelLess> images_;
};

/// Homomorphic image of w, freely reduced.
inline ReducedWord apply_endo(const Endomorphism& phi, const ReducedWord& w) {
    ReducedWord out;
    for (const auto& s : w.syllables())
        out = multiply(out, pow(phi.image_of(s.gen), s.exp));
    return out;
}

inline Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
    Endomorphism r;
    for (const auto& [g, img] : inner.images()) r.set_image(g, apply_endo(outer, img));
    return r;
}

}  // namespace grpord
