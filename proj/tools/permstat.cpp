#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "permstat/bijections.hpp"
#include "permstat/colored.hpp"
#include "permstat/enumerate.hpp"
#include "permstat/patterns.hpp"
#include "permstat/perm.hpp"
#include "permstat/qpoly.hpp"
#include "permstat/verify.hpp"

namespace {

using permstat::StatKind;

nlohmann::json poly_json(int n, StatKind kind, const std::string& patterns,
                         const permstat::QPolynomial& f) {
    nlohmann::json out;
    out["n"] = n;
    out["stat"] = permstat::to_string(kind);
    out["patterns"] = patterns;
    out["coeffs"] = nlohmann::json::array();
    // Coefficients stay numeric while they fit in a double-exact integer,
    // falling back to decimal strings beyond that.
    for (const auto& c : f.coeffs()) {
        if (c <= permstat::BigInt(9007199254740992LL))
            out["coeffs"].push_back(static_cast<std::int64_t>(c));
        else
            out["coeffs"].push_back(c.str());
    }
    return out;
}

std::string csv_row(int n, const permstat::QPolynomial& f) {
    std::string row = std::to_string(n);
    for (const auto& c : f.coeffs()) row += "," + c.str();
    return row;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation statistics, mesh/barred pattern avoidance, and "
                 "the verification harness"};
    app.require_subcommand(1);

    std::string perm_text, patterns_text, stat_name = "des", format = "text";
    std::string path_text, partition_text, map_name, check_name;
    int n = 0, max_n = -1, jobs = 1, times = 1, west = -1;
    long long des_equals = -1;
    bool have_des_filter = false;

    auto* stats_cmd = app.add_subcommand("stats", "print des/inv/maj/exc of a permutation");
    stats_cmd->add_option("perm", perm_text, "permutation text")->required();

    auto* contains_cmd =
        app.add_subcommand("contains", "does the host contain any pattern of the set");
    contains_cmd->add_option("perm", perm_text, "host permutation")->required();
    contains_cmd->add_option("--patterns", patterns_text, "pattern set")->required();

    auto* avoiders_cmd = app.add_subcommand("avoiders", "list avoiders in lexicographic order");
    avoiders_cmd->add_option("--n", n, "length")->required();
    avoiders_cmd->add_option("--patterns", patterns_text, "pattern set");
    avoiders_cmd->add_option("--des-equals", des_equals, "keep only this descent count");
    avoiders_cmd->add_option("--jobs", jobs, "worker threads");
    avoiders_cmd->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* poly_cmd = app.add_subcommand("poly", "statistic polynomial over an avoidance class");
    auto* poly_n = poly_cmd->add_option("--n", n, "length");
    auto* poly_max = poly_cmd->add_option("--max-n", max_n, "lengths 0..max-n");
    poly_cmd->add_option("--stat", stat_name, "des|inv|maj|exc")
        ->check(CLI::IsMember({"des", "inv", "maj", "exc"}));
    poly_cmd->add_option("--patterns", patterns_text, "pattern set");
    poly_cmd->add_option("--jobs", jobs, "worker threads");
    poly_cmd->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* bijection_cmd = app.add_subcommand("bijection", "apply one of the named maps");
    bijection_cmd
        ->add_option("map", map_name,
                     "mu|mu-inverse|partition|partition-inverse|alpha-31-to-23|"
                     "beta-23-to-31|alpha-24-to-23")
        ->required()
        ->check(CLI::IsMember({"mu", "mu-inverse", "partition", "partition-inverse",
                               "alpha-31-to-23", "beta-23-to-31", "alpha-24-to-23"}));
    bijection_cmd->add_option("--perm", perm_text, "permutation input");
    bijection_cmd->add_option("--path", path_text, "Motzkin path input (U/D/H)");
    bijection_cmd->add_option("--partition", partition_text, "set partition input");

    auto* sort_cmd = app.add_subcommand("sort", "stack-sort a permutation");
    sort_cmd->add_option("perm", perm_text, "permutation text")->required();
    sort_cmd->add_option("--times", times, "number of passes");
    auto* west_opt = sort_cmd->add_option("--west", west, "test West-t-stack-sortability");

    auto* verify_cmd = app.add_subcommand("verify", "run a named verification check");
    verify_cmd->add_option("check", check_name, "check name")
        ->required()
        ->check(CLI::IsMember({"prop3.1", "thm3.2", "prop3.3", "thm3.4", "prop3.5",
                               "table1", "conj4.1", "conj4.2", "w2-sortable", "sanity"}));
    auto* verify_max = verify_cmd->add_option("--max-n", max_n, "largest length checked");
    verify_cmd->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (stats_cmd->parsed()) {
            const permstat::Permutation p = permstat::parse_permutation(perm_text);
            std::printf("des=%lld inv=%lld maj=%lld exc=%lld\n",
                        permstat::stat(StatKind::des, p), permstat::stat(StatKind::inv, p),
                        permstat::stat(StatKind::maj, p), permstat::stat(StatKind::exc, p));
            return 0;
        }
        if (contains_cmd->parsed()) {
            const permstat::Permutation host = permstat::parse_permutation(perm_text);
            const permstat::PatternSet ps = permstat::parse_pattern_set(patterns_text);
            std::printf("%s\n", permstat::contains_any(host, ps) ? "true" : "false");
            return 0;
        }
        if (avoiders_cmd->parsed()) {
            permstat::AvoidanceQuery q;
            q.n = n;
            q.patterns = permstat::parse_pattern_set(patterns_text);
            q.stat = StatKind::des;
            have_des_filter = avoiders_cmd->count("--des-equals") > 0;
            if (have_des_filter) q.stat_value = des_equals;
            const std::vector<permstat::Permutation> av = permstat::avoiders(q, jobs);
            if (format == "json") {
                nlohmann::json out;
                out["n"] = n;
                out["patterns"] = patterns_text;
                out["perms"] = nlohmann::json::array();
                for (const auto& p : av) out["perms"].push_back(permstat::format_permutation(p));
                std::printf("%s\n", out.dump().c_str());
            } else {
                for (const auto& p : av)
                    std::printf("%s\n", permstat::format_permutation(p).c_str());
            }
            return 0;
        }
        if (poly_cmd->parsed()) {
            const StatKind kind = permstat::stat_from_string(stat_name);
            const permstat::PatternSet ps = permstat::parse_pattern_set(patterns_text);
            if (*poly_max && *poly_n)
                throw permstat::DomainError("give --n or --max-n, not both");
            if (!*poly_max && !*poly_n)
                throw permstat::DomainError("one of --n or --max-n is required");
            const int lo = *poly_max ? 0 : n;
            const int hi = *poly_max ? max_n : n;
            nlohmann::json rows = nlohmann::json::array();
            for (int m = lo; m <= hi; ++m) {
                const permstat::QPolynomial f = permstat::stat_polynomial(m, ps, kind, jobs);
                if (format == "json") {
                    rows.push_back(poly_json(m, kind, patterns_text, f));
                } else if (format == "csv") {
                    std::printf("%s\n", csv_row(m, f).c_str());
                } else if (*poly_max) {
                    std::printf("n=%d: %s\n", m, f.coeff_list().c_str());
                } else {
                    std::printf("%s\n", f.coeff_list().c_str());
                }
            }
            if (format == "json")
                std::printf("%s\n", (*poly_n ? rows[0].dump() : rows.dump()).c_str());
            return 0;
        }
        if (bijection_cmd->parsed()) {
            const auto need_perm = [&]() {
                if (perm_text.empty())
                    throw permstat::DomainError("this map needs --perm");
                return permstat::parse_permutation(perm_text);
            };
            if (map_name == "mu") {
                std::printf("%s\n",
                            permstat::format_motzkin_path(
                                permstat::motzkin_from_avoider(need_perm()))
                                .c_str());
            } else if (map_name == "mu-inverse") {
                if (path_text.empty())
                    throw permstat::DomainError("this map needs --path");
                std::printf("%s\n",
                            permstat::format_permutation(permstat::avoider_from_motzkin(
                                                             permstat::parse_motzkin_path(path_text)))
                                .c_str());
            } else if (map_name == "partition") {
                std::printf("%s\n",
                            permstat::format_set_partition(
                                permstat::partition_from_avoider(need_perm()))
                                .c_str());
            } else if (map_name == "partition-inverse") {
                if (partition_text.empty())
                    throw permstat::DomainError("this map needs --partition");
                std::printf("%s\n",
                            permstat::format_permutation(permstat::avoider_from_partition(
                                                             permstat::parse_set_partition(partition_text)))
                                .c_str());
            } else {
                const permstat::Permutation sigma = need_perm();
                permstat::Permutation tau;
                if (map_name == "alpha-31-to-23") tau = permstat::alpha_31_to_23(sigma);
                if (map_name == "beta-23-to-31") tau = permstat::beta_23_to_31(sigma);
                if (map_name == "alpha-24-to-23") tau = permstat::alpha_24_to_23(sigma);
                std::printf("%s\n", permstat::format_permutation(tau).c_str());
            }
            return 0;
        }
        if (sort_cmd->parsed()) {
            permstat::Permutation p = permstat::parse_permutation(perm_text);
            if (*west_opt) {
                std::printf("%s\n",
                            permstat::is_west_t_stack_sortable(p, west) ? "true" : "false");
                return 0;
            }
            if (times < 0) throw permstat::DomainError("--times must be nonnegative");
            for (int i = 0; i < times; ++i) p = permstat::stack_sort(p);
            std::printf("%s\n", permstat::format_permutation(p).c_str());
            return 0;
        }
        if (verify_cmd->parsed()) {
            permstat::VerifyCheck check;
            check.name = permstat::check_from_string(check_name);
            check.max_n = *verify_max ? max_n : permstat::default_max_n(check.name);
            const permstat::RunReport report = permstat::run_verify(check, jobs);
            std::printf("%s", permstat::render_report(report).c_str());
            std::fflush(stdout);
            std::fprintf(stderr, "time: %.3fs\n", report.wall_seconds);
            return report.pass ? 0 : 1;
        }
    } catch (const permstat::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
