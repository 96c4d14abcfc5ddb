#pragma once

#include <string>
#include <vector>

#include "permstat/qpoly.hpp"

namespace permstat {

enum class CheckName {
    prop3_1,
    thm3_2,
    prop3_3,
    thm3_4,
    prop3_5,
    table1,
    conj4_1,
    conj4_2,
    w2_sortable,
    sanity,
};

constexpr CheckName kAllChecks[] = {
    CheckName::prop3_1, CheckName::thm3_2,  CheckName::prop3_3,
    CheckName::thm3_4,  CheckName::prop3_5, CheckName::table1,
    CheckName::conj4_1, CheckName::conj4_2, CheckName::w2_sortable,
    CheckName::sanity,
};

std::string to_string(CheckName name);
CheckName check_from_string(const std::string& text);

// Bound chosen per check so the whole suite stays well under ten minutes on
// one core.
int default_max_n(CheckName name);

struct VerifyCheck {
    CheckName name = CheckName::sanity;
    int max_n = 2;
};

struct RunReport {
    CheckName check = CheckName::sanity;
    bool pass = false;
    std::string counterexample; // empty exactly when pass
    double wall_seconds = 0.0;
    int n_lo = 0;
    int n_hi = 0;
    std::vector<std::string> lines;
};

// Runs the named check up to check.max_n (>= 2, else DomainError). The
// report's rendered form is deterministic for a given library build and
// independent of the job count.
RunReport run_verify(const VerifyCheck& check, int jobs = 1);

// Stable text form of a report; excludes wall time so runs can be compared
// byte for byte.
std::string render_report(const RunReport& report);

} // namespace permstat
