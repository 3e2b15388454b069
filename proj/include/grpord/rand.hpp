#pragma once

// Deterministic random elements for fuzzing and property tests. All draws go
// through a std::mt19937_64 engine (whose output sequence is fixed by the
// standard) and integer arithmetic only, so a (seed, flags) pair reproduces
// the same trials on any platform.
//
// Word distribution: syllable count geometric with mean 4 (failure count at
// success probability 1/5), exponents uniform on the integers [-3,3] (zero
// exponents vanish in reduction), indices uniform on [-3,3].

#include <grpord/numeric.hpp>
#include <grpord/word.hpp>

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace grpord {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Failures before the first success at probability 1/5; mean 4.
    int geometric_mean4() {
        int k = 0;
        while (below(5) != 0) ++k;
        return k;
    }

private:
    std::mt19937_64 engine_;
};

/// Random word over named generators.
inline ReducedWord random_named_word(Sampler& rng, std::span<const char> alphabet) {
    WordBuilder b;
    int syllables = rng.geometric_mean4();
    for (int s = 0; s < syllables; ++s) {
        char name = alphabet[rng.below(alphabet.size())];
        b.push(GenLabel::named(name), Int(rng.uniform(-3, 3)));
    }
    return ReducedWord::reduce(b.take());
}

/// Random word over the indexed family x[i,j], |i|,|j| <= index_bound.
inline ReducedWord random_indexed_word(Sampler& rng, long index_bound = 3) {
    WordBuilder b;
    int syllables = rng.geometric_mean4();
    for (int s = 0; s < syllables; ++s) {
        Int i(rng.uniform(-index_bound, index_bound));
        Int j(rng.uniform(-index_bound, index_bound));
        b.push(GenLabel::indexed('x', std::move(i), std::move(j)), Int(rng.uniform(-3, 3)));
    }
    return ReducedWord::reduce(b.take());
}

inline IndexPair random_point(Sampler& rng, long bound) {
    return IndexPair{Int(rng.uniform(-bound, bound)), Int(rng.uniform(-bound, bound))};
}

}  // namespace grpord
