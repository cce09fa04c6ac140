#include "annuity/pricing.hpp"

namespace annuity {

InterestBasis InterestBasis::from_factor(const Rational& factor) {
    if (factor <= 1)
        throw DataError("accumulation factor must exceed 1, got " +
                        factor.get_str());
    return InterestBasis{factor};
}

InterestBasis InterestBasis::from_percent(const Rational& percent) {
    if (percent <= 0)
        throw DataError("interest percent must be positive, got " +
                        percent.get_str());
    return InterestBasis{1 + percent / 100};
}

Rational pv_direct(const MortalityTable& table, const InterestBasis& basis,
                   int age, const Rational& payment) {
    const std::int64_t alive = table.survivors(age);
    if (alive <= 0)
        throw DataError("cannot price an extinct cohort (age " +
                        std::to_string(age) + ")");
    if (payment <= 0)
        throw DataError("annual payment must be positive");

    Rational sum = 0;
    Rational discount = 1;
    for (int k = 1; table.survivors(age + k) > 0; ++k) {
        discount /= basis.lambda;
        sum += Rational(table.survivors(age + k)) * discount;
    }
    return payment * sum / alive;
}

Rational recurrence_step(const InterestBasis& basis, std::int64_t survivors_m,
                         std::int64_t survivors_m1, const Rational& payment,
                         const Rational& price_m1) {
    if (survivors_m <= 0)
        throw DataError("recurrence step needs a living cohort");
    return Rational(survivors_m1) * (payment + price_m1) /
           (basis.lambda * survivors_m);
}

PriceTable price_table(const MortalityTable& table, const InterestBasis& basis,
                       const Rational& payment, int start_age) {
    if (payment <= 0)
        throw DataError("annual payment must be positive");
    const int last = table.last_living_age();
    if (start_age < 0 || start_age > last)
        throw DataError("start age " + std::to_string(start_age) +
                        " has no living cohort");

    PriceTable result{basis, payment, {}};
    result.rows.resize(static_cast<size_t>(last - start_age + 1));

    Rational price = 0;  // beyond extinction
    for (int age = last; age >= start_age; --age) {
        price = recurrence_step(basis, table.survivors(age),
                                table.survivors(age + 1), payment, price);
        result.rows[static_cast<size_t>(age - start_age)] =
            PriceRow{age, table.survivors(age), price, round_crowns(price)};
    }
    return result;
}

Rational deferred_price(const MortalityTable& table, const InterestBasis& basis,
                        int age, int deferral, const Rational& payment) {
    if (deferral < 1)
        throw DataError("deferral must be at least 1 (1 = ordinary annuity)");
    const std::int64_t alive = table.survivors(age);
    if (alive <= 0)
        throw DataError("cannot price an extinct cohort (age " +
                        std::to_string(age) + ")");
    if (payment <= 0)
        throw DataError("annual payment must be positive");

    // First payment goes to survivors(age + deferral); nothing left to pay
    // once the deferral reaches past the last living age.
    const int pivot = age + deferral - 1;
    if (table.survivors(pivot) <= 0 || table.survivors(pivot + 1) <= 0)
        return 0;

    // Deferred price = (1/lambda^(n-1)) * (survivors(pivot)/survivors(age))
    //                  * ordinary price at the pivot age.
    Rational ordinary = pv_direct(table, basis, pivot, payment);
    return ordinary * table.survivors(pivot) /
           (alive * pow_rational(basis.lambda, deferral - 1));
}

Rational implied_yield(const Rational& price, const Rational& payment) {
    if (price <= 0)
        throw DataError("implied yield needs a positive price");
    return 100 * payment / price;
}

Rational median_term_price(const MortalityTable& table, const InterestBasis& basis,
                           int age, const Rational& payment) {
    if (payment <= 0)
        throw DataError("annual payment must be positive");
    const int term = median_remaining_term(table, age);
    Rational sum = 0;
    Rational discount = 1;
    for (int j = 1; j <= term; ++j) {
        discount /= basis.lambda;
        sum += discount;
    }
    return payment * sum;
}

AnnuityQuote quote(const MortalityTable& table, const InterestBasis& basis,
                   int age, int deferral, const Rational& payment) {
    Rational price = deferral == 1
                         ? pv_direct(table, basis, age, payment)
                         : deferred_price(table, basis, age, deferral, payment);
    return AnnuityQuote{age, payment, deferral, price, round_crowns(price)};
}

}  // namespace annuity
