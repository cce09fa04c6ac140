#ifndef ANNUITY_RATIONAL_HPP
#define ANNUITY_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace annuity {

// All interior arithmetic is exact; rounding happens only at display.
using Rational = mpq_class;

// Raised for malformed numeric input and data/validation failures.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parses "21/20", "5", "5.5", "-3/4" into an exact rational.
Rational parse_rational(const std::string& text);

// Fixed-point decimal rendering, half away from zero. Always uses '.'
// as the separator regardless of locale.
std::string format_fixed(const Rational& value, int places);

// Two-decimal crown amounts, the rendering used by every price table.
inline std::string round_crowns(const Rational& value) {
    return format_fixed(value, 2);
}

// Power with integer exponent (n may be negative; base must be nonzero then).
Rational pow_rational(const Rational& base, long exponent);

}  // namespace annuity

#endif
