#include "annuity/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace annuity {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }

    Rational result;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw DataError("not a valid rational: '" + text + "'");
        mpz_class d(den);
        if (d == 0) throw DataError("zero denominator: '" + text + "'");
        result = Rational(mpz_class(num), d);
        result.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string whole = s.substr(0, dot);
        const std::string frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) ||
            (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw DataError("not a valid number: '" + text + "'");
        mpz_class scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class units = whole.empty() ? mpz_class(0) : mpz_class(whole);
        mpz_class hund = frac.empty() ? mpz_class(0) : mpz_class(frac);
        result = Rational(units * scale + hund, scale);
        result.canonicalize();
    } else {
        if (!all_digits(s))
            throw DataError("not a valid number: '" + text + "'");
        result = Rational(mpz_class(s));
    }
    if (negative) result = -result;
    return result;
}

std::string format_fixed(const Rational& value, int places) {
    mpz_class scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;

    mpz_class num = value.get_num() * scale;
    const mpz_class& den = value.get_den();  // canonical, > 0
    const bool negative = num < 0;
    if (negative) num = -num;

    // round half away from zero: floor((2*|num| + den) / (2*den))
    mpz_class scaled = (2 * num + den) / (2 * den);

    mpz_class units = scaled / scale;
    mpz_class frac = scaled % scale;

    std::string out;
    if (negative && scaled != 0) out += '-';
    out += units.get_str();
    if (places > 0) {
        std::string f = frac.get_str();
        out += '.';
        out += std::string(places - f.size(), '0');
        out += f;
    }
    return out;
}

Rational pow_rational(const Rational& base, long exponent) {
    const bool invert = exponent < 0;
    const unsigned long e = invert ? -exponent : exponent;
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), e);
    result.canonicalize();
    if (invert) {
        if (result == 0) throw DataError("zero raised to a negative power");
        result = 1 / result;
    }
    return result;
}

}  // namespace annuity
