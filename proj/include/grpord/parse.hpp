#pragma once

// Shared textual formats. Word grammar (CLI and file inputs):
//
//     word     := syllable*            (whitespace separated)
//     syllable := gen ('^' signed-int)?
//     gen      := name | name '[' int ',' int ']'
//
// with names drawn from {a,b,c,t,x,y}; the bare token `1` denotes the
// identity. Example: `a^2 b^-1 x[0,1]^3`. Matrices are row-major
// `m11,m12;m21,m22`, lattice points `i,j`.

#include <grpord/numeric.hpp>
#include <grpord/surface.hpp>
#include <grpord/word.hpp>
#include <grpord/zn_order.hpp>

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace grpord {

namespace detail {

inline bool is_generator_name(char c) {
    return c == 'a' || c == 'b' || c == 'c' || c == 't' || c == 'x' || c == 'y';
}

inline Int parse_int(std::string_view text, const std::string& what) {
    if (text.empty()) throw parse_error("grpord: empty integer in " + what);
    std::size_t k = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (k == text.size()) throw parse_error("grpord: bare sign in " + what);
    for (std::size_t p = k; p < text.size(); ++p)
        if (!std::isdigit(static_cast<unsigned char>(text[p])))
            throw parse_error("grpord: bad integer '" + std::string(text) + "' in " + what);
    return Int(std::string(text));
}

inline Syllable parse_syllable(std::string_view token) {
    std::size_t pos = 0;
    if (!is_generator_name(token[0]))
        throw parse_error("grpord: unknown generator in token '" + std::string(token) + "'");
    char name = token[pos++];
    GenLabel gen = GenLabel::named(name);
    if (pos < token.size() && token[pos] == '[') {
        std::size_t comma = token.find(',', pos);
        std::size_t close = token.find(']', pos);
        if (comma == std::string_view::npos || close == std::string_view::npos || comma > close)
            throw parse_error("grpord: malformed index in token '" + std::string(token) + "'");
        Int i = parse_int(token.substr(pos + 1, comma - pos - 1), "index");
        Int j = parse_int(token.substr(comma + 1, close - comma - 1), "index");
        gen = GenLabel::indexed(name, std::move(i), std::move(j));
        pos = close + 1;
    }
    Int exp = 1;
    if (pos < token.size()) {
        if (token[pos] != '^')
            throw parse_error("grpord: expected '^' in token '" + std::string(token) + "'");
        exp = parse_int(token.substr(pos + 1), "exponent");
    }
    return Syllable{gen, exp};
}

}  // namespace detail

/// Parses a word in the shared grammar.
inline ReducedWord parse_word(std::string_view text) {
    WordBuilder b;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        std::string_view token = text.substr(pos, end - pos);
        pos = end;
        if (token == "1") continue;  // the identity contributes nothing
        b.push(detail::parse_syllable(token));
    }
    return ReducedWord::reduce(b.take());
}

inline std::string print_label(const GenLabel& g) {
    std::string out(1, g.name);
    if (g.has_index) out += "[" + g.index.i.str() + "," + g.index.j.str() + "]";
    return out;
}

inline std::string print_word(const ReducedWord& w) {
    if (w.is_identity()) return "1";
    std::string out;
    for (const auto& s : w.syllables()) {
        if (!out.empty()) out += " ";
        out += print_label(s.gen);
        if (s.exp != 1) out += "^" + s.exp.str();
    }
    return out;
}

/// Parses `m11,m12;m21,m22`.
inline IntMatrix2 parse_matrix2(std::string_view text) {
    std::size_t semi = text.find(';');
    if (semi == std::string_view::npos)
        throw parse_error("grpord: matrix needs two ';'-separated rows");
    auto row = [](std::string_view part, Int* lhs, Int* rhs) {
        std::size_t comma = part.find(',');
        if (comma == std::string_view::npos)
            throw parse_error("grpord: matrix row needs two ','-separated entries");
        *lhs = detail::parse_int(part.substr(0, comma), "matrix entry");
        *rhs = detail::parse_int(part.substr(comma + 1), "matrix entry");
    };
    IntMatrix2 m;
    row(text.substr(0, semi), &m.m11, &m.m12);
    row(text.substr(semi + 1), &m.m21, &m.m22);
    return m;
}

/// Parses a lattice point `i,j`.
inline IndexPair parse_point(std::string_view text) {
    std::size_t comma = text.find(',');
    if (comma == std::string_view::npos)
        throw parse_error("grpord: point needs two ','-separated coordinates");
    return IndexPair{detail::parse_int(text.substr(0, comma), "coordinate"),
                     detail::parse_int(text.substr(comma + 1), "coordinate")};
}

inline std::string print_point(const IndexPair& p) { return p.i.str() + "," + p.j.str(); }

/// Normal-form rendering `a^m b^n · <f>`.
inline std::string print_nf(const NF3P2& u) {
    return "a^" + u.m.str() + " b^" + u.n.str() + " · " + print_word(u.f);
}

}  // namespace grpord
