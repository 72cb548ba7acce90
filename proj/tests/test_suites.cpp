#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "wittsmooth/errors.hpp"
#include "wittsmooth/suites.hpp"

using namespace wittsmooth;
using nlohmann::json;

namespace {

json stripped_report(const std::string& name, std::uint64_t seed) {
    json j = suites::suite_report_to_json(suites::run_suite(name, seed));
    j.erase("wall_time_ms");
    return j;
}

}  // namespace

TEST_CASE("every suite passes with a fixed seed") {
    const std::vector<std::string> names = suites::suite_names();
    REQUIRE(names.size() == 10);
    REQUIRE(std::set<std::string>(names.begin(), names.end()).size() == names.size());

    for (const std::string& name : names) {
        INFO("suite " << name);
        suites::SuiteReport rep = suites::run_suite(name, 20240817u);
        REQUIRE(rep.suite == name);
        REQUIRE(rep.seed == 20240817u);
        REQUIRE_FALSE(rep.window.empty());
        REQUIRE_FALSE(rep.checks.empty());
        for (const suites::CheckResult& c : rep.checks) {
            INFO("check " << c.name << ": " << c.witness);
            CHECK(c.pass);
        }
        CHECK(rep.passed());
        CHECK(std::is_sorted(rep.checks.begin(), rep.checks.end(),
                             [](const suites::CheckResult& a, const suites::CheckResult& b) {
                                 return a.name < b.name;
                             }));
    }
}

TEST_CASE("suite reports are deterministic for a given seed") {
    for (const std::string& name : {std::string("jacobi"), std::string("whittaker")}) {
        INFO("suite " << name);
        CHECK(stripped_report(name, 5u) == stripped_report(name, 5u));
    }
    CHECK(stripped_report("p0", 1u) != stripped_report("p0", 2u));
}

TEST_CASE("suite report JSON carries the full record") {
    json j = suites::suite_report_to_json(suites::run_suite("tensor", 99u));
    REQUIRE(j.is_object());
    CHECK(j.at("suite") == "tensor");
    CHECK(j.at("seed") == 99u);
    CHECK(j.at("passed") == true);
    CHECK(j.at("window").is_string());
    CHECK(j.at("wall_time_ms").is_number());
    REQUIRE(j.at("checks").is_array());
    for (const json& c : j.at("checks")) {
        CHECK(c.at("name").is_string());
        CHECK((c.at("status") == "pass" || c.at("status") == "fail"));
        CHECK(c.at("witness").is_string());
    }
}

TEST_CASE("unknown suite names are rejected") {
    CHECK_THROWS_AS(suites::run_suite("verma", 1u), UsageError);
    CHECK_THROWS_AS(suites::run_suite("", 1u), UsageError);
}

TEST_CASE("a failing check surfaces in the report") {
    suites::detail::Tally tally;
    tally.require(true, "first");
    tally.require(false, "alpha=(2,0)");
    tally.require(false, "alpha=(0,2)");
    suites::CheckResult r = tally.result("demo");
    CHECK_FALSE(r.pass);
    CHECK(r.witness == "2 of 3 failed; first: alpha=(2,0)");

    suites::detail::Tally empty;
    suites::CheckResult e = empty.result("empty");
    CHECK_FALSE(e.pass);

    suites::SuiteReport rep;
    rep.suite = "demo";
    CHECK_FALSE(rep.passed());
    rep.checks.push_back(r);
    CHECK_FALSE(rep.passed());
}
