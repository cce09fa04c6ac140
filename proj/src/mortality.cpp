#include "annuity/mortality.hpp"

#include <cctype>
#include <sstream>

namespace annuity {

MortalityTable MortalityTable::from_survivors(std::vector<std::int64_t> counts) {
    if (counts.empty())
        throw DataError("mortality table is empty");
    if (counts[0] <= 0)
        throw DataError("radix (survivors at age 0) must be positive, got " +
                        std::to_string(counts[0]));
    for (size_t a = 0; a < counts.size(); ++a) {
        if (counts[a] < 0)
            throw DataError("negative survivor count at age " + std::to_string(a));
        if (a > 0 && counts[a] > counts[a - 1])
            throw DataError("survivors increased at age " + std::to_string(a) +
                            " (" + std::to_string(counts[a - 1]) + " -> " +
                            std::to_string(counts[a]) + ")");
    }
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return MortalityTable(std::move(counts));
}

const MortalityTable& kersseboom() {
    static const MortalityTable table = MortalityTable::from_survivors({
        1000, 804, 768, 736, 709, 690, 676, 664, 654, 646,   //  0- 9
        639,  633, 627, 621, 616, 611, 606, 601, 596, 590,   // 10-19
        584,  577, 571, 565, 559, 552, 544, 535, 525, 516,   // 20-29
        507,  499, 490, 482, 475, 468, 461, 454, 446, 439,   // 30-39
        432,  426, 420, 413, 406, 400, 393, 386, 378, 370,   // 40-49
        362,  354, 345, 336, 327, 319, 310, 301, 291, 282,   // 50-59
        273,  264, 254, 245, 235, 225, 215, 205, 195, 185,   // 60-69
        175,  165, 155, 145, 135, 125, 114, 104, 93,  82,    // 70-79
        72,   63,  54,  46,  39,  32,  26,  20,  15,  11,    // 80-89
        8,    6,   4,   3,   2,   1,                         // 90-95
    });
    return table;
}

namespace {

std::int64_t parse_count(const std::string& field, int line_no, const char* what) {
    if (field.empty())
        throw DataError("line " + std::to_string(line_no) + ": empty " +
                        std::string(what) + " field");
    for (char c : field)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw DataError("line " + std::to_string(line_no) + ": " + what +
                            " is not a base-10 integer: '" + field + "'");
    try {
        return std::stoll(field);
    } catch (const std::out_of_range&) {
        throw DataError("line " + std::to_string(line_no) + ": " + what +
                        " out of range: '" + field + "'");
    }
}

}  // namespace

MortalityTable load_table(std::istream& source) {
    std::string line;
    int line_no = 0;
    std::vector<std::int64_t> counts;

    while (std::getline(source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && source.eof()) break;

        if (line_no == 1) {
            if (line != "age,survivors")
                throw DataError("line 1: expected header 'age,survivors', got '" +
                                line + "'");
            continue;
        }

        auto comma = line.find(',');
        if (comma == std::string::npos ||
            line.find(',', comma + 1) != std::string::npos)
            throw DataError("line " + std::to_string(line_no) +
                            ": expected exactly two fields: '" + line + "'");

        std::int64_t age = parse_count(line.substr(0, comma), line_no, "age");
        std::int64_t count = parse_count(line.substr(comma + 1), line_no, "survivors");

        const std::int64_t expected = static_cast<std::int64_t>(counts.size());
        if (age != expected)
            throw DataError("line " + std::to_string(line_no) + ": expected age " +
                            std::to_string(expected) + ", got " +
                            std::to_string(age) + " (ages must be consecutive from 0)");
        if (!counts.empty() && count > counts.back())
            throw DataError("line " + std::to_string(line_no) +
                            ": survivors increased at age " + std::to_string(age) +
                            " (" + std::to_string(counts.back()) + " -> " +
                            std::to_string(count) + ")");
        counts.push_back(count);
    }

    if (line_no == 0)
        throw DataError("empty input: missing 'age,survivors' header");
    if (counts.empty())
        throw DataError("no data rows after header");
    if (counts[0] <= 0)
        throw DataError("line 2: radix (survivors at age 0) must be positive");
    return MortalityTable::from_survivors(std::move(counts));
}

std::string serialize(const MortalityTable& table) {
    std::ostringstream out;
    out << "age,survivors\n";
    for (int a = 0; a <= table.last_living_age(); ++a)
        out << a << ',' << table.survivors(a) << '\n';
    return out.str();
}

int median_remaining_term(const MortalityTable& table, int age) {
    const std::int64_t alive = table.survivors(age);
    if (alive <= 0)
        throw DataError("no living cohort at age " + std::to_string(age));
    int k = 1;
    while (2 * table.survivors(age + k) > alive) ++k;
    return k;
}

}  // namespace annuity
