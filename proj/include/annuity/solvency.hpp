#ifndef ANNUITY_SOLVENCY_HPP
#define ANNUITY_SOLVENCY_HPP

#include <vector>

#include "annuity/pricing.hpp"

namespace annuity {

struct ReserveRow {
    int year;                 // t >= 0
    int age;                  // start_age + t
    std::int64_t survivors;   // alive at that age
    Rational reserve;         // manager's capital after the year-t payment
};

// Year-by-year run-off of the manager's capital for one cohort that buys
// identical annuities at start_age. Interest accrues first, then the
// year-end payment to that year's survivors.
struct ReserveTrajectory {
    int start_age;
    InterestBasis basis;
    Rational annual_payment;
    std::vector<ReserveRow> rows;  // t = 0 through the first survivor-free age
};

// Initial capital is survivors(age) times the exact price; each later year
// applies reserve <- lambda * reserve - survivors * payment. The reserve
// hits exactly zero with the final payment and stays there.
ReserveTrajectory project_reserves(const MortalityTable& table,
                                   const InterestBasis& basis, int age,
                                   const Rational& payment);

}  // namespace annuity

#endif
