#ifndef ANNUITY_PRICING_HPP
#define ANNUITY_PRICING_HPP

#include <vector>

#include "annuity/mortality.hpp"
#include "annuity/rational.hpp"

namespace annuity {

// Annual accumulation factor: one plus the interest rate, exact.
// 5 percent <=> 21/20.
struct InterestBasis {
    Rational lambda;

    static InterestBasis from_factor(const Rational& factor);
    static InterestBasis from_percent(const Rational& percent);
};

struct AnnuityQuote {
    int age = 0;
    Rational annual_payment;
    int deferral = 1;  // 1 = ordinary annuity, first payment one year hence
    Rational exact_price;
    std::string display_price;
};

struct PriceRow {
    int age;
    std::int64_t survivors;
    Rational exact_price;
    std::string display_price;
};

struct PriceTable {
    InterestBasis basis;
    Rational annual_payment;
    std::vector<PriceRow> rows;  // consecutive ages, every age with survivors
};

// Direct summation of the discounted survival-weighted payment stream:
// price = (payment / survivors(age)) * sum_{k>=1} survivors(age+k) / lambda^k.
// The sum is finite (terms vanish at extinction).
Rational pv_direct(const MortalityTable& table, const InterestBasis& basis,
                   int age, const Rational& payment);

// One backward step: the age-m price from the age-(m+1) price,
// (1/lambda) * (survivors_m1 / survivors_m) * (payment + price_m1).
Rational recurrence_step(const InterestBasis& basis, std::int64_t survivors_m,
                         std::int64_t survivors_m1, const Rational& payment,
                         const Rational& price_m1);

// Full table via a single backward sweep from the last living age,
// seeded with price 0 beyond extinction. Every row's exact price equals
// pv_direct for that age.
PriceTable price_table(const MortalityTable& table, const InterestBasis& basis,
                       const Rational& payment, int start_age = 0);

// Price of an annuity whose first payment occurs `deferral` years hence
// (deferral = 1 is the ordinary annuity). Zero once the deferral passes
// extinction.
Rational deferred_price(const MortalityTable& table, const InterestBasis& basis,
                        int age, int deferral, const Rational& payment);

// Annual payment as a percentage of the purchase price: 100 * payment / price.
Rational implied_yield(const Rational& price, const Rational& payment);

// The flawed fixed-term method: values the annuity as an annuity-certain
// over the cohort's median remaining term, ignoring survival weighting.
Rational median_term_price(const MortalityTable& table, const InterestBasis& basis,
                           int age, const Rational& payment);

AnnuityQuote quote(const MortalityTable& table, const InterestBasis& basis,
                   int age, int deferral, const Rational& payment);

}  // namespace annuity

#endif
