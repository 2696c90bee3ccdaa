// Noncommutative polynomials over Q on named generators. Words are
// sequences of generator indices; the term order is deglex (degree first,
// then lexicographic by generator index).

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qaut/rational.hpp"

namespace qaut {

using GenId = std::uint32_t;
using Word = std::vector<GenId>;

// -1 / 0 / +1 for a < b / a == b / a > b in deglex.
int deglex_compare(const Word& a, const Word& b);

struct SymbolTable {
    std::vector<std::string> names;
    std::map<std::string, GenId> index;

    GenId add(const std::string& name);
    GenId lookup(const std::string& name) const;  // throws ParseError
    std::size_t size() const { return names.size(); }
};

class NCPoly {
public:
    NCPoly() = default;

    static NCPoly scalar(Rational c);
    static NCPoly generator(GenId g);
    static NCPoly monomial(Rational c, Word w);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    // Degree of the leading word (deglex maximal); 0 for the zero polynomial.
    std::size_t degree() const;

    const Word& leading_word() const;
    const Rational& leading_coeff() const;
    // Terms in strictly descending deglex order.
    const std::vector<std::pair<Word, Rational>>& terms() const { return terms_; }

    bool operator==(const NCPoly& o) const = default;

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly operator*(const Rational& c) const;
    NCPoly operator-() const;

    void add_term(const Word& w, const Rational& c);

    // u * p * v
    NCPoly conjugate(const Word& u, const Word& v) const;

    // Replace every generator by a polynomial (algebra-map substitution).
    NCPoly substitute(const std::vector<NCPoly>& images) const;
    // Replace every generator by a scalar; the word value is the product.
    Rational evaluate(const std::vector<Rational>& values) const;

    std::string to_string(const SymbolTable& syms) const;

private:
    // Invariant: descending deglex, no zero coefficients, distinct words.
    std::vector<std::pair<Word, Rational>> terms_;
};

// Parses the format produced by NCPoly::to_string: terms joined by '+'/'-',
// each an optional rational coefficient and '*'-separated generator names,
// e.g. "3/2*u0_11*u0_12 - u0_21 + 1".
NCPoly parse_poly(const std::string& text, const SymbolTable& syms);

}  // namespace qaut
