#ifndef ANNUITY_MORTALITY_HPP
#define ANNUITY_MORTALITY_HPP

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "annuity/rational.hpp"

namespace annuity {

// Survivor counts of a birth cohort per integer age. Immutable after
// construction; survivors(a) is 0 for any age past the stored range.
class MortalityTable {
public:
    // Validates: non-empty, survivors[0] > 0, non-increasing, all >= 0.
    // Trailing zero entries are trimmed so equal tables compare equal.
    static MortalityTable from_survivors(std::vector<std::int64_t> counts);

    std::int64_t survivors(int age) const {
        if (age < 0 || static_cast<size_t>(age) >= counts_.size()) return 0;
        return counts_[static_cast<size_t>(age)];
    }

    std::int64_t radix() const { return counts_.front(); }

    // Highest age with at least one survivor.
    int last_living_age() const { return static_cast<int>(counts_.size()) - 1; }

    // Smallest age with zero survivors.
    int extinction_age() const { return static_cast<int>(counts_.size()); }

    bool operator==(const MortalityTable& other) const {
        return counts_ == other.counts_;
    }

private:
    explicit MortalityTable(std::vector<std::int64_t> counts)
        : counts_(std::move(counts)) {}

    std::vector<std::int64_t> counts_;
};

// The built-in annuitant table: a 1000-birth cohort, ages 0-95.
const MortalityTable& kersseboom();

// Parses a mortality CSV: header exactly "age,survivors", consecutive
// ascending ages from 0, base-10 integer counts, LF or CRLF line ends.
// Throws DataError naming the offending line on any violation.
MortalityTable load_table(std::istream& source);

// Inverse of load_table (header + one row per stored age, LF line ends).
std::string serialize(const MortalityTable& table);

// Smallest k >= 1 with survivors(m + k) <= survivors(m) / 2 (exact half;
// first age where the cohort has fallen to at most half counts as the
// median term). Throws DataError if nobody is alive at age m.
int median_remaining_term(const MortalityTable& table, int age);

}  // namespace annuity

#endif
