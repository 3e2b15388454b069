#pragma once

// Truncated noncommutative formal power series over Z in variables X[i,j],
// and the Magnus map from free-group words into their unit group: each
// generator goes to 1 + X, each inverse generator to the geometric series
// 1 - X + X^2 - ... . A general power x^e expands to the binomial series
// sum_k C(e,k) X^k, which is exact for arbitrary-precision exponents of
// either sign.
//
// Every series carries its truncation degree; arithmetic across different
// degrees is an error rather than a coercion, since a silent mismatch would
// corrupt order comparisons downstream.

#include <grpord/numeric.hpp>
#include <grpord/word.hpp>
#include <grpord/zn_order.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace grpord {

/// A word in the variables; the empty sequence is the constant monomial.
using Monomial = std::vector<IndexPair>;

/// Structural storage order: ascending degree, then lexicographic on the
/// subscript sequence. Coincides with the lex variable order, so the lowest
/// term under LEX is the first nonconstant entry.
struct MonomialDegLexLess {
    bool operator()(const Monomial& u, const Monomial& v) const {
        if (u.size() != v.size()) return u.size() < v.size();
        for (std::size_t k = 0; k < u.size(); ++k) {
            auto c = lex_compare(u[k], v[k]);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        }
        return false;
    }
};

class TruncatedSeries {
public:
    using TermMap = std::map<Monomial, Int, MonomialDegLexLess>;

    explicit TruncatedSeries(int degree_bound) : degree_bound_(degree_bound) {}

    static TruncatedSeries constant(const Int& c, int degree_bound) {
        TruncatedSeries s(degree_bound);
        s.add(Monomial{}, c);
        return s;
    }

    static TruncatedSeries one(int degree_bound) { return constant(1, degree_bound); }

    int degree_bound() const { return degree_bound_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Int constant_term() const { return coefficient(Monomial{}); }

    bool has_nonconstant_term() const {
        if (terms_.empty()) return false;
        auto it = terms_.begin();
        if (!it->first.empty()) return true;
        return std::next(it) != terms_.end();
    }

    /// Accumulates coeff onto monomial m, dropping overflow degrees and zeros.
    void add(const Monomial& m, const Int& coeff) {
        if (coeff == 0 || m.size() > static_cast<std::size_t>(degree_bound_)) return;
        auto [it, inserted] = terms_.emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const TruncatedSeries& o) const {
        return degree_bound_ == o.degree_bound_ && terms_ == o.terms_;
    }

private:
    int degree_bound_;
    TermMap terms_;
};

inline TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (s.degree_bound() != t.degree_bound())
        throw std::invalid_argument("grpord: mismatched truncation degrees");
    TruncatedSeries out = s;
    for (const auto& [m, c] : t.terms()) out.add(m, c);
    return out;
}

/// Distributive concatenation-of-monomials product, degrees above the bound
/// discarded.
inline TruncatedSeries series_multiply(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (s.degree_bound() != t.degree_bound())
        throw std::invalid_argument("grpord: mismatched truncation degrees");
    TruncatedSeries out(s.degree_bound());
    const auto bound = static_cast<std::size_t>(s.degree_bound());
    for (const auto& [mu, cu] : s.terms()) {
        if (mu.size() > bound) continue;
        for (const auto& [mv, cv] : t.terms()) {
            if (mu.size() + mv.size() > bound) continue;
            Monomial prod = mu;
            prod.insert(prod.end(), mv.begin(), mv.end());
            out.add(prod, cu * cv);
        }
    }
    return out;
}

/// Inverse of a unit 1 + eps via the geometric series 1 - eps + eps^2 - ... .
inline TruncatedSeries unit_inverse(const TruncatedSeries& s) {
    if (s.constant_term() != 1)
        throw std::invalid_argument("grpord: unit_inverse requires constant term 1");
    TruncatedSeries eps = s;
    {
        TruncatedSeries minus_one = TruncatedSeries::constant(-1, s.degree_bound());
        eps = series_add(eps, minus_one);
    }
    TruncatedSeries acc = TruncatedSeries::one(s.degree_bound());
    TruncatedSeries power = TruncatedSeries::one(s.degree_bound());
    Int unit_sign = 1;
    for (int k = 1; k <= s.degree_bound(); ++k) {
        power = series_multiply(power, eps);
        if (power.is_zero()) break;
        unit_sign = -unit_sign;
        for (const auto& [m, c] : power.terms()) acc.add(m, unit_sign * c);
    }
    return acc;
}

/// Assignment of a variable subscript to each generator label.
using VarMap = std::function<IndexPair(const GenLabel&)>;

/// Image of a single power x^e: sum_k C(e,k) X^k up to the bound.
inline TruncatedSeries binomial_series(const IndexPair& var, const Int& exp, int degree_bound) {
    TruncatedSeries s(degree_bound);
    Monomial m;
    for (int k = 0; k <= degree_bound; ++k) {
        s.add(m, binomial(exp, static_cast<unsigned>(k)));
        m.push_back(var);
    }
    return s;
}

/// Homomorphic image of w under the Magnus map, truncated at degree_bound.
inline TruncatedSeries magnus_expand(const ReducedWord& w, int degree_bound,
                                     const VarMap& varmap) {
    TruncatedSeries out = TruncatedSeries::one(degree_bound);
    for (const auto& syl : w.syllables())
        out = series_multiply(out, binomial_series(varmap(syl.gen), syl.exp, degree_bound));
    return out;
}

/// Minimal nonconstant stored term: lower degree first, then position-by-
/// position comparison of subscripts under ord. Empty for constant series.
inline std::optional<std::pair<Monomial, Int>> lowest_term(const TruncatedSeries& s,
                                                           const Z2Order& ord) {
    auto it = s.terms().begin();
    if (it != s.terms().end() && it->first.empty()) ++it;  // skip the constant
    if (it == s.terms().end()) return std::nullopt;

    const std::size_t degree = it->first.size();
    auto best = it;
    for (auto probe = std::next(it); probe != s.terms().end() && probe->first.size() == degree;
         ++probe) {
        const Monomial& u = probe->first;
        const Monomial& v = best->first;
        for (std::size_t k = 0; k < degree; ++k) {
            auto c = ord.compare(u[k], v[k]);
            if (c == std::strong_ordering::less) {
                best = probe;
                break;
            }
            if (c == std::strong_ordering::greater) break;
        }
    }
    return std::make_pair(best->first, best->second);
}

inline std::string to_string(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k) out += "·";
        out += "X[" + m[k].i.str() + "," + m[k].j.str() + "]";
    }
    return out;
}

/// Debug rendering, terms in ascending monomial order:
/// `1 + X[0,0]·X[1,0] - X[1,0]·X[0,0]`.
inline std::string to_string(const TruncatedSeries& s) {
    if (s.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : s.terms()) {
        Int mag = boost::multiprecision::abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (m.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "·";
            out += to_string(m);
        }
    }
    return out;
}

}  // namespace grpord
