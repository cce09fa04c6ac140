#include "annuity/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "annuity/mortality.hpp"
#include "annuity/pricing.hpp"
#include "annuity/solvency.hpp"

namespace annuity::cli {

namespace {

enum class OutputFormat { csv, tsv, markdown };

struct CommonOptions {
    std::string mortality_path;  // empty = built-in table
    std::string interest;        // percent, e.g. "5"
    std::string rate;            // accumulation factor, e.g. "21/20"
    std::string annuity = "100";
    OutputFormat format = OutputFormat::csv;

    MortalityTable table() const {
        if (mortality_path.empty()) return kersseboom();
        std::ifstream in(mortality_path);
        if (!in)
            throw DataError("cannot open mortality file: " + mortality_path);
        return load_table(in);
    }

    InterestBasis basis() const {
        if (!rate.empty())
            return InterestBasis::from_factor(parse_rational(rate));
        return InterestBasis::from_percent(
            parse_rational(interest.empty() ? "5" : interest));
    }

    Rational payment() const {
        Rational r = parse_rational(annuity);
        if (r <= 0) throw DataError("--annuity must be positive");
        return r;
    }
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_format = true) {
    cmd->add_option("--mortality", opt.mortality_path,
                    "Mortality CSV path (default: built-in table)");
    auto* interest =
        cmd->add_option("--interest", opt.interest, "Annual interest percent");
    auto* rate = cmd->add_option("--rate", opt.rate,
                                 "Annual accumulation factor as p/q");
    interest->excludes(rate);
    rate->excludes(interest);
    cmd->add_option("--annuity", opt.annuity, "Annual payment in crowns");
    if (with_format) {
        std::map<std::string, OutputFormat> names{
            {"csv", OutputFormat::csv},
            {"tsv", OutputFormat::tsv},
            {"markdown", OutputFormat::markdown}};
        cmd->add_option("--format", opt.format, "Output format")
            ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
    }
}

class TableWriter {
public:
    TableWriter(std::ostream& out, OutputFormat format,
                std::vector<std::string> header)
        : out_(out), format_(format), width_(header.size()) {
        row(header);
        if (format_ == OutputFormat::markdown) {
            std::string sep = "|";
            for (size_t i = 0; i < width_; ++i) sep += " --- |";
            out_ << sep << '\n';
        }
    }

    void row(const std::vector<std::string>& cells) {
        if (format_ == OutputFormat::markdown) {
            out_ << '|';
            for (const auto& c : cells) out_ << ' ' << c << " |";
            out_ << '\n';
            return;
        }
        const char sep = format_ == OutputFormat::csv ? ',' : '\t';
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << sep;
            out_ << cells[i];
        }
        out_ << '\n';
    }

private:
    std::ostream& out_;
    OutputFormat format_;
    size_t width_;
};

std::string percent2(const Rational& value) { return format_fixed(value, 2); }

void run_price(const CommonOptions& opt, int age, std::ostream& out) {
    out << quote(opt.table(), opt.basis(), age, 1, opt.payment()).display_price
        << '\n';
}

void run_table(const CommonOptions& opt, std::ostream& out) {
    const PriceTable result =
        price_table(opt.table(), opt.basis(), opt.payment());
    TableWriter w(out, opt.format, {"age", "survivors", "price"});
    for (const auto& r : result.rows)
        w.row({std::to_string(r.age), std::to_string(r.survivors),
               r.display_price});
}

void run_deferred(const CommonOptions& opt, int age, int defer, int sweep,
                  std::ostream& out) {
    const MortalityTable table = opt.table();
    const InterestBasis basis = opt.basis();
    const Rational payment = opt.payment();
    if (sweep <= 0) {
        out << round_crowns(deferred_price(table, basis, age, defer, payment))
            << '\n';
        return;
    }
    TableWriter w(out, opt.format, {"age", "price"});
    for (int a = 0; table.survivors(a) > 0; a += sweep) {
        Rational price = deferred_price(table, basis, a, defer, payment);
        if (price == 0) break;
        w.row({std::to_string(a), round_crowns(price)});
    }
}

void run_yield(const CommonOptions& opt, int step, std::ostream& out) {
    const MortalityTable table = opt.table();
    const InterestBasis basis = opt.basis();
    const Rational payment = opt.payment();
    TableWriter w(out, opt.format, {"age", "percent"});
    for (int a = 0; table.survivors(a) > 0; a += step) {
        Rational price = pv_direct(table, basis, a, payment);
        if (price == 0) break;  // last living age collects nothing
        w.row({std::to_string(a), percent2(implied_yield(price, payment))});
    }
}

void run_solvency(const CommonOptions& opt, int age, std::ostream& out) {
    const ReserveTrajectory traj =
        project_reserves(opt.table(), opt.basis(), age, opt.payment());
    TableWriter w(out, opt.format, {"year", "age", "survivors", "reserve"});
    for (const auto& r : traj.rows)
        w.row({std::to_string(r.year), std::to_string(r.age),
               std::to_string(r.survivors), round_crowns(r.reserve)});
}

void run_median(const CommonOptions& opt, int age, bool have_age,
                std::ostream& out) {
    const MortalityTable table = opt.table();
    const InterestBasis basis = opt.basis();
    const Rational payment = opt.payment();
    TableWriter w(out, opt.format,
                  {"age", "term", "median_price", "price", "gap"});
    const int first = have_age ? age : 0;
    const int last = have_age ? age : table.last_living_age();
    for (int a = first; a <= last; ++a) {
        const int term = median_remaining_term(table, a);
        const Rational flawed = median_term_price(table, basis, a, payment);
        const Rational exact = pv_direct(table, basis, a, payment);
        w.row({std::to_string(a), std::to_string(term), round_crowns(flawed),
               round_crowns(exact), round_crowns(flawed - exact)});
    }
}

void run_validate(const CommonOptions& opt, std::ostream& out) {
    if (opt.mortality_path.empty())
        throw DataError("validate requires --mortality <path>");
    const MortalityTable table = opt.table();
    out << "ok: " << (table.last_living_age() + 1) << " ages, radix "
        << table.radix() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Life-annuity pricing over a mortality table"};
    app.require_subcommand(1);

    CommonOptions opt;
    int age = 0;
    int defer = 1;
    int sweep = 0;
    int step = 5;

    auto* price = app.add_subcommand("price", "Price an ordinary life annuity");
    add_common(price, opt, false);
    price->add_option("--age", age, "Annuitant age in whole years")->required();

    auto* table = app.add_subcommand("table", "Price table for every age");
    add_common(table, opt);

    auto* deferred =
        app.add_subcommand("deferred", "Price a deferred life annuity");
    add_common(deferred, opt);
    auto* def_age = deferred->add_option("--age", age, "Annuitant age");
    deferred->add_option("--defer", defer, "Years until the first payment")
        ->required()
        ->check(CLI::PositiveNumber);
    deferred->add_option("--sweep", sweep, "Emit a table at this age step")
        ->check(CLI::PositiveNumber);

    auto* yield =
        app.add_subcommand("yield", "Payment as a percent of the price");
    add_common(yield, opt);
    yield->add_option("--step", step, "Age step between rows")
        ->check(CLI::PositiveNumber);

    auto* solvency =
        app.add_subcommand("solvency", "Cohort reserve run-off by year");
    add_common(solvency, opt);
    solvency->add_option("--age", age, "Cohort start age")->required();

    auto* median = app.add_subcommand(
        "median", "Fixed-median-term pricing versus the true price");
    add_common(median, opt);
    auto* med_age = median->add_option("--age", age, "Single age to report");

    auto* validate =
        app.add_subcommand("validate", "Check a mortality CSV file");
    validate->add_option("--mortality", opt.mortality_path, "Mortality CSV path")
        ->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (price->parsed()) {
            run_price(opt, age, out);
        } else if (table->parsed()) {
            run_table(opt, out);
        } else if (deferred->parsed()) {
            if (sweep <= 0 && def_age->count() == 0)
                throw DataError("deferred needs --age (or --sweep)");
            run_deferred(opt, age, defer, sweep, out);
        } else if (yield->parsed()) {
            run_yield(opt, step, out);
        } else if (solvency->parsed()) {
            run_solvency(opt, age, out);
        } else if (median->parsed()) {
            run_median(opt, age, med_age->count() > 0, out);
        } else if (validate->parsed()) {
            run_validate(opt, out);
        }
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace annuity::cli
