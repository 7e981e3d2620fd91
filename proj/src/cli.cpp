#include "rhombus/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <regex>

#include "rhombus/check.hpp"
#include "rhombus/methods.hpp"
#include "rhombus/series.hpp"

namespace rhombus::cli {

namespace {

enum class Format { plain, json, csv };

struct Options {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::string method = "recurrence";
    std::int64_t terms = 10;
    std::string series_name;
    Format format = Format::plain;
    std::size_t order = 30;
    std::int64_t oracle_cap = 12;
    std::int64_t max_i = 40;
    std::int64_t max_oracle_n = 12;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Integers go out as bare JSON number literals, exact to the last digit.
std::string json_value(const ExactRatio& v) {
    if (v.is_integer()) return v.to_string();
    return nlohmann::json(v.to_string()).dump();
}

template <typename T>
void write_sequence(std::ostream& out, const std::vector<T>& values, Format format) {
    switch (format) {
        case Format::plain:
            for (std::size_t k = 0; k < values.size(); ++k) out << (k ? "," : "") << values[k];
            out << '\n';
            break;
        case Format::csv:
            for (const auto& v : values) out << v << '\n';
            break;
        case Format::json:
            out << '[';
            for (std::size_t k = 0; k < values.size(); ++k) out << (k ? "," : "") << json_value(ExactRatio(values[k]));
            out << "]\n";
            break;
    }
}

Method resolve_method(const std::string& name) {
    if (auto m = parse_method(name)) return *m;
    throw UsageError("unknown method '" + name + "'");
}

MethodLimits limits_of(const Options& o) { return {o.order, o.oracle_cap}; }

int cmd_entry(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.method != "all") {
        const auto v = entry_by(resolve_method(o.method), o.i, o.j, limits_of(o));
        write_sequence(out, std::vector<ExactInt>{v}, o.format == Format::json ? Format::plain : o.format);
        return kExitOk;
    }

    std::vector<std::pair<Method, ExactInt>> results;
    for (Method m : kAllMethods) {
        try {
            results.emplace_back(m, entry_by(m, o.i, o.j, limits_of(o)));
        } catch (const MethodUnavailable& e) {
            err << "skipping " << method_name(m) << ": " << e.what() << '\n';
        }
    }
    bool agree = true;
    for (const auto& [m, v] : results) agree = agree && v == results.front().second;

    switch (o.format) {
        case Format::plain:
            for (const auto& [m, v] : results) out << method_name(m) << ' ' << v << '\n';
            break;
        case Format::csv:
            for (const auto& [m, v] : results) out << method_name(m) << ',' << v << '\n';
            break;
        case Format::json: {
            out << '{';
            for (std::size_t k = 0; k < results.size(); ++k) {
                out << (k ? "," : "") << nlohmann::json(std::string(method_name(results[k].first))).dump() << ':'
                    << results[k].second;
            }
            out << "}\n";
            break;
        }
    }
    if (!agree) {
        err << "methods disagree at (" << o.i << "," << o.j << ")\n";
        return kExitDisagreement;
    }
    return kExitOk;
}

int cmd_row(const Options& o, std::ostream& out) {
    write_sequence(out, row_by(resolve_method(o.method), o.i, limits_of(o)), o.format);
    return kExitOk;
}

int cmd_column(const Options& o, std::ostream& out) {
    write_sequence(out, column_by(resolve_method(o.method), o.j, o.terms, limits_of(o)), o.format);
    return kExitOk;
}

int cmd_series(const Options& o, std::ostream& out) {
    const auto n = static_cast<std::size_t>(o.terms);
    static const std::regex column_name(R"(L(\d{1,4}))");
    std::smatch match;
    TruncatedSeries s(1);
    if (o.series_name == "F") {
        s = fibonacci_gf(n);
    } else if (o.series_name == "C") {
        s = catalan_gf(n);
    } else if (o.series_name == "B") {
        s = motzkin2_gf(n, Motzkin2Method::closed_form);
    } else if (std::regex_match(o.series_name, match, column_name)) {
        s = column_gf(std::stoul(match[1].str()), n, ColumnMethod::theorem_formula);
    } else {
        throw UsageError("unknown series '" + o.series_name + "' (expected F, C, B or L<j>)");
    }
    write_sequence(out, s.coeffs(), o.format);
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
    if (o.max_oracle_n > o.oracle_cap) {
        throw UsageError("--max-oracle-n " + std::to_string(o.max_oracle_n) + " exceeds --oracle-cap " +
                         std::to_string(o.oracle_cap));
    }
    const CheckConfig config{o.max_i, o.max_oracle_n, o.order, o.oracle_cap};
    const auto report = run_checks(config);
    if (o.format == Format::json) {
        nlohmann::json j;
        j["passed"] = report.all_passed();
        j["suites"] = nlohmann::json::array();
        for (const auto& s : report.suites) {
            j["suites"].push_back({{"name", s.name}, {"status", status_label(s.status)}, {"detail", s.detail}});
        }
        out << j.dump(2) << '\n';
    } else {
        write_report(out, report);
    }
    return report.all_passed() ? kExitOk : kExitDisagreement;
}

void add_format(CLI::App* sub, Options& o) {
    const std::map<std::string, Format> formats{{"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};
    sub->add_option("--format", o.format, "Output encoding")->transform(CLI::CheckedTransformer(formats));
}

void add_method(CLI::App* sub, Options& o, bool allow_all) {
    std::vector<std::string> names;
    for (Method m : kAllMethods) names.emplace_back(method_name(m));
    if (allow_all) names.emplace_back("all");
    sub->add_option("--method", o.method, "Computation route")->check(CLI::IsMember(names));
    sub->add_option("--order", o.order, "Series truncation order")->check(CLI::PositiveNumber);
    sub->add_option("--oracle-cap", o.oracle_cap, "Largest path length the oracle may enumerate")
        ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pascal rhombus entries by recurrence, closed forms, generating functions and path enumeration"};
    app.require_subcommand(1);
    Options o;

    auto* entry = app.add_subcommand("entry", "Print r(i, j)");
    entry->add_option("i", o.i, "Row")->required()->check(CLI::NonNegativeNumber);
    entry->add_option("j", o.j, "Column (negative allowed)")->required()->allow_extra_args(false);
    add_method(entry, o, true);
    add_format(entry, o);

    auto* row = app.add_subcommand("row", "Print row i");
    row->add_option("i", o.i, "Row")->required()->check(CLI::NonNegativeNumber);
    add_method(row, o, false);
    add_format(row, o);

    auto* column = app.add_subcommand("column", "Print column j starting at its first nonzero entry");
    column->add_option("j", o.j, "Column (negative allowed)")->required();
    column->add_option("--terms", o.terms, "Number of values")->check(CLI::PositiveNumber);
    add_method(column, o, false);
    add_format(column, o);

    auto* series = app.add_subcommand("series", "Print coefficients of F, C, B or L<j>");
    series->add_option("name", o.series_name, "F | C | B | L<j>")->required();
    series->add_option("--terms", o.terms, "Number of coefficients")->check(CLI::PositiveNumber);
    add_format(series, o);

    auto* check = app.add_subcommand("check", "Run the cross-method verification suites");
    check->add_option("--max-i", o.max_i, "Rows compared across methods")->check(CLI::NonNegativeNumber);
    check->add_option("--max-oracle-n", o.max_oracle_n, "Path lengths enumerated (0 skips)")
        ->check(CLI::NonNegativeNumber);
    check->add_option("--order", o.order, "Series truncation order")->check(CLI::PositiveNumber);
    check->add_option("--oracle-cap", o.oracle_cap, "Largest enumerable path length")->check(CLI::NonNegativeNumber);
    add_format(check, o);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*entry) return cmd_entry(o, out, err);
        if (*row) return cmd_row(o, out);
        if (*column) return cmd_column(o, out);
        if (*series) return cmd_series(o, out);
        if (*check) return cmd_check(o, out);
    } catch (const std::invalid_argument& e) {
        // MethodUnavailable, UsageError and argument validation from the library.
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace rhombus::cli
