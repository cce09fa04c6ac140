#include "annuity/solvency.hpp"

namespace annuity {

ReserveTrajectory project_reserves(const MortalityTable& table,
                                   const InterestBasis& basis, int age,
                                   const Rational& payment) {
    const std::int64_t alive = table.survivors(age);
    if (alive <= 0)
        throw DataError("no living cohort at age " + std::to_string(age));

    ReserveTrajectory result{age, basis, payment, {}};
    Rational reserve = alive * pv_direct(table, basis, age, payment);
    result.rows.push_back(ReserveRow{0, age, alive, reserve});

    for (int t = 1;; ++t) {
        const std::int64_t now = table.survivors(age + t);
        reserve = basis.lambda * reserve - now * payment;
        result.rows.push_back(ReserveRow{t, age + t, now, reserve});
        if (now == 0) break;
    }
    return result;
}

}  // namespace annuity
