#include "qaut/rational.hpp"

namespace qaut {

Rational frac(long num, long den) {
    if (den == 0)
        throw Error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw ParseError("empty rational literal");
    mpq_class r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw ParseError("malformed rational literal: '" + text + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw ParseError("zero denominator in rational literal: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace qaut
