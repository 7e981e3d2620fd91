#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "rhombus/cli.hpp"
#include "rhombus/table.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "rhombus");
    std::ostringstream out;
    std::ostringstream err;
    const int code = rhombus::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string part; std::getline(is, part, sep);) out.push_back(part);
    return out;
}

// Collects the raw text of every JSON number, so big integers survive decoding.
struct RawNumbers : nlohmann::json_sax<nlohmann::json> {
    std::vector<std::string> values;
    bool null() override { return true; }
    bool boolean(bool) override { return true; }
    bool number_integer(number_integer_t v) override { values.push_back(std::to_string(v)); return true; }
    bool number_unsigned(number_unsigned_t v) override { values.push_back(std::to_string(v)); return true; }
    bool number_float(number_float_t, const string_t& s) override { values.push_back(s); return true; }
    bool string(string_t&) override { return true; }
    bool binary(binary_t&) override { return true; }
    bool start_object(std::size_t) override { return true; }
    bool key(string_t&) override { return true; }
    bool end_object() override { return true; }
    bool start_array(std::size_t) override { return true; }
    bool end_array() override { return true; }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }
};

std::vector<std::string> json_numbers(const std::string& text) {
    RawNumbers sax;
    REQUIRE(nlohmann::json::sax_parse(text, &sax));
    return sax.values;
}

}  // namespace

TEST_CASE("entry") {
    auto r = run({"entry", "5", "0", "--method", "recurrence"});
    CHECK(r.code == 0);
    CHECK(r.out == "82\n");

    r = run({"entry", "3", "-1"});
    CHECK(r.code == 0);
    CHECK(r.out == "8\n");

    for (const char* m : {"triple_sum", "convolved", "series", "oracle"}) {
        r = run({"entry", "4", "2", "--method", m});
        CHECK(r.code == 0);
        CHECK(r.out == "13\n");
    }
}

TEST_CASE("entry --method all") {
    auto r = run({"entry", "4", "2", "--method", "all"});
    CHECK(r.code == 0);
    auto out = lines(r.out);
    REQUIRE(out.size() == 5);
    for (const auto& line : out) CHECK(line.substr(line.find(' ') + 1) == "13");

    r = run({"entry", "2", "5", "--method", "all"});
    CHECK(r.code == 0);
    out = lines(r.out);
    REQUIRE(out.size() == 5);
    for (const auto& line : out) CHECK(line.substr(line.find(' ') + 1) == "0");

    r = run({"entry", "4", "2", "--method", "all", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 5);
    CHECK(j["series"] == 13);
    CHECK(j["oracle"] == 13);
}

TEST_CASE("entry --method all skips unavailable routes") {
    const auto r = run({"entry", "20", "3", "--method", "all"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 4);
    CHECK(r.err.find("skipping oracle") != std::string::npos);
}

TEST_CASE("row and column") {
    auto r = run({"row", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,3,8,9,8,3,1\n");

    r = run({"column", "1", "--terms", "8"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,2,8,22,72,218,691,2158\n");

    r = run({"column", "0", "--terms", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    r = run({"column", "-2", "--terms", "7", "--method", "series"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,3,13,42,146,476,1574\n");

    for (const char* m : {"triple_sum", "convolved", "series", "oracle"}) {
        r = run({"row", "5", "--method", m});
        CHECK(r.code == 0);
        CHECK(r.out == "1,5,19,42,72,82,72,42,19,5,1\n");
    }
}

TEST_CASE("formats decode to identical values") {
    const auto plain = run({"row", "6"});
    const auto json = run({"row", "6", "--format", "json"});
    const auto csv = run({"row", "6", "--format", "csv"});
    REQUIRE(plain.code == 0);
    REQUIRE(json.code == 0);
    REQUIRE(csv.code == 0);
    const auto from_plain = split(lines(plain.out).at(0), ',');
    CHECK(json_numbers(json.out) == from_plain);
    CHECK(lines(csv.out) == from_plain);
    CHECK(nlohmann::json::parse(json.out).is_array());
}

TEST_CASE("json keeps every digit of large entries") {
    const auto plain = run({"row", "120"});
    const auto json = run({"row", "120", "--format", "json"});
    REQUIRE(plain.code == 0);
    REQUIRE(json.code == 0);
    const auto values = split(lines(plain.out).at(0), ',');
    CHECK(values[120] == rhombus::RhombusTable::build(120).entry(120, 0).to_string());
    CHECK(values[120].size() > 20);
    CHECK(json_numbers(json.out) == values);
    CHECK(plain.out.find('e') == std::string::npos);
}

TEST_CASE("series") {
    auto r = run({"series", "F", "--terms", "8"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,1,1,2,3,5,8,13\n");
    r = run({"series", "C", "--terms", "6"});
    CHECK(r.out == "1,1,2,5,14,42\n");
    r = run({"series", "B", "--terms", "6"});
    CHECK(r.out == "1,1,3,6,16,40\n");
    r = run({"series", "L0", "--terms", "7"});
    CHECK(r.out == "1,1,4,9,29,82,255\n");
    r = run({"series", "L3", "--terms", "10", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse("[0,0,0,1,4,19,70,261,914,3177]"));
    r = run({"series", "Q"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
}

TEST_CASE("check command") {
    auto r = run({"check"});
    CHECK(r.code == 0);
    for (const auto& line : lines(r.out)) CHECK(line.rfind("PASS", 0) == 0);

    r = run({"check", "--max-i", "8", "--max-oracle-n", "0", "--order", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("SKIPPED  path-oracle") != std::string::npos);

    r = run({"check", "--max-i", "6", "--max-oracle-n", "4", "--order", "8", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["suites"].size() == 7);

    r = run({"check", "--max-oracle-n", "13"});
    CHECK(r.code == 2);
}

TEST_CASE("usage errors exit 2 with diagnostics on stderr") {
    auto r = run({});
    CHECK(r.code == 2);
    r = run({"entry", "5"});
    CHECK(r.code == 2);
    r = run({"entry", "-1", "0"});
    CHECK(r.code == 2);
    r = run({"entry", "5", "0", "--method", "magic"});
    CHECK(r.code == 2);
    r = run({"entry", "13", "0", "--method", "oracle"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("cap") != std::string::npos);
    r = run({"entry", "30", "0", "--method", "series"});
    CHECK(r.code == 2);
    CHECK(r.err.find("order") != std::string::npos);
    r = run({"entry", "30", "0", "--method", "series", "--order", "31"});
    CHECK(r.code == 0);
    r = run({"row", "3", "--format", "xml"});
    CHECK(r.code == 2);
    r = run({"column", "2", "--terms", "0"});
    CHECK(r.code == 2);
    r = run({"row", "2", "--method", "all"});
    CHECK(r.code == 2);
}

TEST_CASE("help exits 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("entry") != std::string::npos);
}

TEST_CASE("determinism") {
    CHECK(run({"row", "9", "--method", "convolved"}).out == run({"row", "9", "--method", "convolved"}).out);
}
