#include "hopfg/rational.hpp"

#include <cctype>

namespace hopfg {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw SchemaError("empty rational literal");
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    auto ok_part = [](const std::string& p) {
        if (p.empty()) return false;
        std::size_t i = (p[0] == '-' || p[0] == '+') ? 1 : 0;
        if (i == p.size()) return false;
        for (; i < p.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(p[i]))) return false;
        return true;
    };
    std::string num = t, den = "1";
    if (auto pos = t.find('/'); pos != std::string::npos) {
        num = t.substr(0, pos);
        den = t.substr(pos + 1);
    }
    if (!ok_part(num) || !ok_part(den))
        throw SchemaError("malformed rational literal: '" + s + "'");
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw SchemaError("malformed rational literal: '" + s + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw SchemaError("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw Error("integer out of range for long: " + z.get_str());
    return z.get_si();
}

}  // namespace hopfg
