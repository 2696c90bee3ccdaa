#include "qaut/ncpoly.hpp"

#include <algorithm>
#include <cctype>

namespace qaut {

int deglex_compare(const Word& a, const Word& b) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

GenId SymbolTable::add(const std::string& name) {
    auto [it, inserted] = index.emplace(name, static_cast<GenId>(names.size()));
    if (!inserted)
        throw Error("duplicate generator name '" + name + "'");
    names.push_back(name);
    return it->second;
}

GenId SymbolTable::lookup(const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end())
        throw ParseError("unknown generator '" + name + "'");
    return it->second;
}

NCPoly NCPoly::scalar(Rational c) {
    NCPoly p;
    if (c != 0)
        p.terms_.emplace_back(Word{}, std::move(c));
    return p;
}

NCPoly NCPoly::generator(GenId g) {
    NCPoly p;
    p.terms_.emplace_back(Word{g}, Rational(1));
    return p;
}

NCPoly NCPoly::monomial(Rational c, Word w) {
    NCPoly p;
    if (c != 0)
        p.terms_.emplace_back(std::move(w), std::move(c));
    return p;
}

std::size_t NCPoly::degree() const {
    return terms_.empty() ? 0 : terms_.front().first.size();
}

const Word& NCPoly::leading_word() const {
    if (terms_.empty())
        throw Error("leading_word of zero polynomial");
    return terms_.front().first;
}

const Rational& NCPoly::leading_coeff() const {
    if (terms_.empty())
        throw Error("leading_coeff of zero polynomial");
    return terms_.front().second;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int cmp = deglex_compare(terms_[i].first, o.terms_[j].first);
        if (cmp > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].second + o.terms_[j].second;
            if (c != 0)
                r.terms_.emplace_back(terms_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j)
        r.terms_.push_back(o.terms_[j]);
    return r;
}

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.terms_)
        c = -c;
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    return *this + (-o);
}

NCPoly NCPoly::operator*(const Rational& c) const {
    if (c == 0)
        return NCPoly();
    NCPoly r = *this;
    for (auto& [w, coeff] : r.terms_)
        coeff *= c;
    return r;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
    if (c == 0)
        return;
    // Binary search for the insertion point (descending order).
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const std::pair<Word, Rational>& t, const Word& key) {
                                   return deglex_compare(t.first, key) > 0;
                               });
    if (it != terms_.end() && deglex_compare(it->first, w) == 0) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    } else {
        terms_.insert(it, {w, c});
    }
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

NCPoly NCPoly::conjugate(const Word& u, const Word& v) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
        Word uwv = u;
        uwv.insert(uwv.end(), w.begin(), w.end());
        uwv.insert(uwv.end(), v.begin(), v.end());
        r.add_term(uwv, c);
    }
    return r;
}

NCPoly NCPoly::substitute(const std::vector<NCPoly>& images) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
        NCPoly prod = NCPoly::scalar(c);
        for (GenId g : w)
            prod = prod * images.at(g);
        r = r + prod;
    }
    return r;
}

Rational NCPoly::evaluate(const std::vector<Rational>& values) const {
    Rational r = 0;
    for (const auto& [w, c] : terms_) {
        Rational prod = c;
        for (GenId g : w)
            prod *= values.at(g);
        r += prod;
    }
    return r;
}

std::string NCPoly::to_string(const SymbolTable& syms) const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool need_coeff = w.empty() || abs != 1;
        if (need_coeff)
            out += abs.get_str();
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (need_coeff || i > 0)
                out += "*";
            out += syms.names.at(w[i]);
        }
    }
    return out;
}

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_number_start(char c) {
    return std::isdigit(static_cast<unsigned char>(c));
}

}  // namespace

NCPoly parse_poly(const std::string& text, const SymbolTable& syms) {
    NCPoly result;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_ws();
    if (pos == text.size())
        throw ParseError("empty polynomial");
    bool first_term = true;
    while (pos < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first_term) {
            throw ParseError("expected '+' or '-' between terms at position " +
                             std::to_string(pos));
        }
        first_term = false;
        if (pos == text.size())
            throw ParseError("dangling sign at end of polynomial");

        Rational coeff(sign);
        Word word;
        bool saw_factor = false;
        bool expect_factor = true;
        while (pos < text.size() && expect_factor) {
            skip_ws();
            if (pos == text.size())
                throw ParseError("dangling '*' at end of polynomial");
            if (is_number_start(text[pos])) {
                std::size_t start = pos;
                while (pos < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                    ++pos;
                coeff *= parse_rational(text.substr(start, pos - start));
            } else if (is_name_char(text[pos])) {
                std::size_t start = pos;
                while (pos < text.size() && is_name_char(text[pos]))
                    ++pos;
                word.push_back(syms.lookup(text.substr(start, pos - start)));
            } else {
                throw ParseError("unexpected character '" + std::string(1, text[pos]) +
                                 "' at position " + std::to_string(pos));
            }
            saw_factor = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        if (!saw_factor)
            throw ParseError("empty term at position " + std::to_string(pos));
        result.add_term(word, coeff);
        skip_ws();
    }
    return result;
}

}  // namespace qaut
