#include "doctest.h"

#include "permstat/verify.hpp"

using namespace permstat;

TEST_CASE("check names round trip") {
    for (CheckName name : kAllChecks) {
        CHECK(check_from_string(to_string(name)) == name);
    }
    CHECK(to_string(CheckName::prop3_1) == "prop3.1");
    CHECK(to_string(CheckName::w2_sortable) == "w2-sortable");
    CHECK_THROWS_AS(check_from_string("prop9.9"), DomainError);
    CHECK_THROWS_AS(check_from_string(""), DomainError);
}

TEST_CASE("default bounds") {
    CHECK(default_max_n(CheckName::prop3_1) == 9);
    CHECK(default_max_n(CheckName::thm3_2) == 8);
    CHECK(default_max_n(CheckName::prop3_3) == 9);
    CHECK(default_max_n(CheckName::thm3_4) == 10);
    CHECK(default_max_n(CheckName::prop3_5) == 9);
    CHECK(default_max_n(CheckName::table1) == 8);
    CHECK(default_max_n(CheckName::conj4_1) == 8);
    CHECK(default_max_n(CheckName::conj4_2) == 8);
    CHECK(default_max_n(CheckName::w2_sortable) == 8);
    CHECK(default_max_n(CheckName::sanity) == 7);
}

TEST_CASE("every check passes at a small bound") {
    for (CheckName name : kAllChecks) {
        const RunReport report = run_verify({name, 5}, 2);
        CHECK_MESSAGE(report.pass, to_string(name), ": ", report.counterexample);
        CHECK(report.counterexample.empty());
        CHECK(report.check == name);
        CHECK(report.n_lo <= report.n_hi);
        CHECK_FALSE(report.lines.empty());
        CHECK(report.wall_seconds >= 0.0);
    }
}

TEST_CASE("reports are deterministic and job-count independent") {
    for (CheckName name : {CheckName::table1, CheckName::thm3_2, CheckName::sanity}) {
        const std::string once = render_report(run_verify({name, 5}, 1));
        const std::string again = render_report(run_verify({name, 5}, 1));
        const std::string parallel = render_report(run_verify({name, 5}, 4));
        CHECK(once == again);
        CHECK(once == parallel);
    }
}

TEST_CASE("bound validation") {
    CHECK_THROWS_AS(run_verify({CheckName::sanity, 1}), DomainError);
    CHECK_THROWS_AS(run_verify({CheckName::table1, 0}), DomainError);
    CHECK_THROWS_AS(run_verify({CheckName::table1, -3}), DomainError);
    CHECK_NOTHROW(run_verify({CheckName::sanity, 2}));
}

TEST_CASE("rendered form carries the verdict and the range") {
    const RunReport report = run_verify({CheckName::prop3_5, 4});
    const std::string text = render_report(report);
    CHECK(text.find("prop3.5") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find(std::to_string(report.n_lo) + ".." + std::to_string(report.n_hi)) !=
          std::string::npos);
}
