#include "permstat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

#include "permstat/bijections.hpp"
#include "permstat/enumerate.hpp"
#include "permstat/patterns.hpp"
#include "permstat/perm.hpp"

namespace permstat {

std::string to_string(CheckName name) {
    switch (name) {
        case CheckName::prop3_1: return "prop3.1";
        case CheckName::thm3_2: return "thm3.2";
        case CheckName::prop3_3: return "prop3.3";
        case CheckName::thm3_4: return "thm3.4";
        case CheckName::prop3_5: return "prop3.5";
        case CheckName::table1: return "table1";
        case CheckName::conj4_1: return "conj4.1";
        case CheckName::conj4_2: return "conj4.2";
        case CheckName::w2_sortable: return "w2-sortable";
        case CheckName::sanity: return "sanity";
    }
    throw DomainError("unknown check");
}

CheckName check_from_string(const std::string& text) {
    for (CheckName name : kAllChecks)
        if (to_string(name) == text) return name;
    throw DomainError("unknown check name: " + text);
}

int default_max_n(CheckName name) {
    switch (name) {
        case CheckName::prop3_1: return 9;
        case CheckName::thm3_2: return 8;
        case CheckName::prop3_3: return 9;
        case CheckName::thm3_4: return 10;
        case CheckName::prop3_5: return 9;
        case CheckName::table1: return 8;
        case CheckName::conj4_1: return 8;
        case CheckName::conj4_2: return 8;
        case CheckName::w2_sortable: return 8;
        case CheckName::sanity: return 7;
    }
    throw DomainError("unknown check");
}

namespace {

MeshPattern column1(std::vector<int> base) {
    std::set<std::pair<int, int>> boxes;
    for (int b = 0; b <= 4; ++b) boxes.insert({1, b});
    return make_mesh(Permutation(std::move(base)), std::move(boxes));
}

MeshPattern columns12(std::vector<int> base) {
    std::set<std::pair<int, int>> boxes;
    for (int b = 0; b <= 4; ++b) {
        boxes.insert({1, b});
        boxes.insert({2, b});
    }
    return make_mesh(Permutation(std::move(base)), std::move(boxes));
}

PatternSet one_item(PatternItem item) {
    PatternSet ps;
    ps.items.push_back(std::move(item));
    return ps;
}

QPolynomial from_row(const std::vector<long long>& row) {
    QPolynomial f;
    for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k]) f.add_term(k, row[k]);
    return f;
}

BigInt factorial_big(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

struct CheckResult {
    bool pass = true;
    std::string counterexample;
};

void fail(CheckResult& res, std::string cx) {
    if (res.pass) {
        res.pass = false;
        res.counterexample = std::move(cx);
    }
}

const std::map<int, std::vector<long long>>& table1_family1() {
    static const std::map<int, std::vector<long long>> rows = {
        {4, {1, 10, 11, 1}},
        {5, {1, 20, 57, 26, 1}},
        {6, {1, 35, 204, 252, 57, 1}},
        {7, {1, 56, 581, 1500, 969, 120, 1}},
        {8, {1, 84, 1414, 6588, 9117, 3426, 247, 1}},
    };
    return rows;
}

const std::map<int, std::vector<long long>>& table1_family2() {
    static const std::map<int, std::vector<long long>> rows = {
        {4, {1, 10, 11, 1}},
        {5, {1, 20, 56, 26, 1}},
        {6, {1, 35, 196, 241, 57, 1}},
        {7, {1, 56, 546, 1361, 897, 120, 1}},
        {8, {1, 84, 1302, 5675, 7739, 3060, 247, 1}},
    };
    return rows;
}

CheckResult check_table1(int max_n, int jobs, std::vector<std::string>& lines) {
    CheckResult res;
    struct Family {
        const char* label;
        std::vector<std::vector<int>> bases;
        const std::map<int, std::vector<long long>>* rows;
    };
    const std::vector<Family> families = {
        {"{1243,3412}|col1", {{1, 2, 4, 3}, {3, 4, 1, 2}}, &table1_family1()},
        {"{1342,2413}|col1", {{1, 3, 4, 2}, {2, 4, 1, 3}}, &table1_family2()},
    };
    for (int n = 4; n <= std::min(max_n, 8); ++n) {
        std::string line = "n=" + std::to_string(n);
        for (const Family& fam : families) {
            const QPolynomial expected = from_row(fam.rows->at(n));
            for (const auto& base : fam.bases) {
                const MeshPattern p = column1(base);
                const QPolynomial got =
                    stat_polynomial(n, one_item(p), StatKind::des, jobs);
                if (got != expected) {
                    fail(res, "n=" + std::to_string(n) + " pattern " +
                                  format_pattern_item(p) + ": got " +
                                  got.coeff_list() + " expected " +
                                  expected.coeff_list());
                    return res;
                }
            }
            line += std::string(" ") + fam.label + " -> " + expected.coeff_list() + " ok;";
        }
        lines.push_back(line);
    }
    return res;
}

CheckResult check_conj4_1(int max_n, int jobs, std::vector<std::string>& lines) {
    CheckResult res;
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs = {
        {{1, 2, 4, 3}, {3, 4, 1, 2}},
        {{1, 3, 4, 2}, {2, 4, 1, 3}},
    };
    for (int n = 2; n <= max_n; ++n) {
        std::string line = "n=" + std::to_string(n);
        for (const auto& [a, b] : pairs) {
            const MeshPattern pa = column1(a);
            const MeshPattern pb = column1(b);
            const QPolynomial fa = stat_polynomial(n, one_item(pa), StatKind::des, jobs);
            const QPolynomial fb = stat_polynomial(n, one_item(pb), StatKind::des, jobs);
            if (fa != fb) {
                fail(res, "n=" + std::to_string(n) + ": F(" + format_pattern_item(pa) +
                              ")=" + fa.coeff_list() + " but F(" +
                              format_pattern_item(pb) + ")=" + fb.coeff_list());
                return res;
            }
            line += " F(" + format_pattern_item(pa) + ")=F(" + format_pattern_item(pb) +
                    ")=" + fa.coeff_list() + " ok;";
        }
        lines.push_back(line);
    }
    return res;
}

CheckResult check_prop3_3(int max_n, int jobs, std::vector<std::string>& lines) {
    CheckResult res;
    const MeshPattern p = make_mesh(Permutation({1, 3, 2}), {{2, 0}});
    for (int n = 1; n <= max_n; ++n) {
        const QPolynomial got = stat_polynomial(n, one_item(p), StatKind::des, jobs);
        QPolynomial expected;
        for (int k = 0; k < n; ++k) expected.add_term(static_cast<std::size_t>(k), stirling2(n, k + 1));
        if (got != expected) {
            fail(res, "n=" + std::to_string(n) + ": got " + got.coeff_list() +
                          " expected stirling2 row " + expected.coeff_list());
            return res;
        }
        lines.push_back("n=" + std::to_string(n) + " " + got.coeff_list() +
                        " = stirling2(" + std::to_string(n) + ",k+1) ok");
    }
    return res;
}

CheckResult check_thm3_4(int max_n, int jobs, std::vector<std::string>& lines) {
    CheckResult res;
    PatternSet ps;
    ps.items.push_back(Permutation({3, 2, 1}));
    ps.items.push_back(make_mesh(Permutation({2, 3, 1}), {{1, 0}}));
    for (int n = 0; n <= max_n; ++n) {
        const QPolynomial got = stat_polynomial(n, ps, StatKind::des, jobs);
        QPolynomial expected;
        for (int k = 0; 2 * k <= n; ++k)
            expected.add_term(static_cast<std::size_t>(k), motzkin_count(n, k));
        if (got != expected) {
            fail(res, "n=" + std::to_string(n) + ": got " + got.coeff_list() +
                          " expected motzkin row " + expected.coeff_list());
            return res;
        }
        lines.push_back("n=" + std::to_string(n) + " " + got.coeff_list() +
                        " = motzkin_count(" + std::to_string(n) + ",k) ok");
    }
    return res;
}

CheckResult check_prop3_5(int max_n, int jobs, std::vector<std::string>& lines) {
    CheckResult res;
    const BarredPattern b1 = make_barred(Permutation({1, 2, 4, 3}), {1, 2});
    const BarredPattern b2 = make_barred(Permutation({1, 3, 2, 4}), {1, 4});
    for (int n = 0; n <= max_n; ++n) {
        const QPolynomial f1 = stat_polynomial(n, one_item(b1), StatKind::des, jobs);
        const QPolynomial f2 = stat_polynomial(n, one_item(b2), StatKind::des, jobs);
        const QPolynomial expected = n <= 1 ? QPolynomial::one() : eulerian_poly(n - 2);
        if (f1 != expected || f2 != expected) {
            fail(res, "n=" + std::to_string(n) + ": F(1'2'43)=" + f1.coeff_list() +
                          " F(1'324')=" + f2.coeff_list() + " expected " +
                          expected.coeff_list());
            return res;
        }
        lines.push_back("n=" + std::to_string(n) + " F(1'2'43)=F(1'324')=" +
                        expected.coeff_list() + " ok");
    }
    return res;
}

CheckResult check_thm3_2(int max_n, int jobs, std::vector<std::string>& lines) {
    CheckResult res;
    const MeshPattern m31 = columns12({3, 1, 2, 4});
    const MeshPattern m23 = columns12({2, 3, 1, 4});
    const MeshPattern m24 = columns12({2, 4, 1, 3});
    for (int n = 2; n <= max_n; ++n) {
        const QPolynomial f31 = stat_polynomial(n, one_item(m31), StatKind::des, jobs);
        const QPolynomial f23 = stat_polynomial(n, one_item(m23), StatKind::des, jobs);
        const QPolynomial f24 = stat_polynomial(n, one_item(m24), StatKind::des, jobs);
        if (f31 != f23 || f23 != f24) {
            fail(res, "n=" + std::to_string(n) + ": F(3124|cols12)=" + f31.coeff_list() +
                          " F(2314|cols12)=" + f23.coeff_list() +
                          " F(2413|cols12)=" + f24.coeff_list());
            return res;
        }
        std::string line = "n=" + std::to_string(n) +
                           " F equal across {3124,2314,2413}|cols12: " + f31.coeff_list();
        if (n <= 7) {
            std::vector<Permutation> c1, c2, c3;
            std::vector<int> a(static_cast<std::size_t>(n));
            std::iota(a.begin(), a.end(), 1);
            do {
                const Permutation sigma(a);
                if (contains_3124_shaded(sigma)) c1.push_back(sigma);
                if (contains_2314_shaded(sigma)) c2.push_back(sigma);
                if (contains_2413_shaded(sigma)) c3.push_back(sigma);
            } while (std::next_permutation(a.begin(), a.end()));
            if (BigInt(c1.size()) != factorial_big(n) - f31.coeff_sum()) {
                fail(res, "n=" + std::to_string(n) +
                              ": containment class size disagrees with avoidance count");
                return res;
            }
            std::set<std::vector<int>> images31, images24;
            for (const Permutation& sigma : c1) {
                const Permutation tau = alpha_31_to_23(sigma);
                if (stat(StatKind::des, tau) != stat(StatKind::des, sigma)) {
                    fail(res, "alpha_31_to_23 changes des at " + format_permutation(sigma));
                    return res;
                }
                if (!contains_2314_shaded(tau)) {
                    fail(res, "alpha_31_to_23 image outside target at " +
                                  format_permutation(sigma));
                    return res;
                }
                if (beta_23_to_31(tau) != sigma) {
                    fail(res, "beta_23_to_31 does not invert alpha at " +
                                  format_permutation(sigma));
                    return res;
                }
                images31.insert(tau.letters());
            }
            if (images31.size() != c1.size() || c1.size() != c2.size()) {
                fail(res, "n=" + std::to_string(n) + ": alpha_31_to_23 is not a bijection");
                return res;
            }
            for (const Permutation& sigma : c3) {
                const Permutation tau = alpha_24_to_23(sigma);
                if (stat(StatKind::des, tau) != stat(StatKind::des, sigma)) {
                    fail(res, "alpha_24_to_23 changes des at " + format_permutation(sigma));
                    return res;
                }
                if (!contains_2314_shaded(tau)) {
                    fail(res, "alpha_24_to_23 image outside target at " +
                                  format_permutation(sigma));
                    return res;
                }
                images24.insert(tau.letters());
            }
            if (images24.size() != c3.size() || c3.size() != c2.size()) {
                fail(res, "n=" + std::to_string(n) + ": alpha_24_to_23 is not a bijection");
                return res;
            }
            line += "; maps bijective on " + std::to_string(c1.size()) + " members ok";
        }
        lines.push_back(line);
    }
    return res;
}

CheckResult check_prop3_1(int max_n, int jobs, std::vector<std::string>& lines) {
    CheckResult res;
    const Permutation p312({3, 1, 2});
    const Permutation p132({1, 3, 2});
    for (int n = 1; n <= max_n; ++n) {
        const QPolynomial f312 = stat_polynomial(n, one_item(p312), StatKind::des, jobs);
        const QPolynomial f132 = stat_polynomial(n, one_item(p132), StatKind::des, jobs);
        QPolynomial expected;
        for (int k = 0; k < n; ++k) expected.add_term(static_cast<std::size_t>(k), narayana(n, k));
        if (f312 != expected) {
            fail(res, "n=" + std::to_string(n) + ": F(312)=" + f312.coeff_list() +
                          " expected narayana row " + expected.coeff_list());
            return res;
        }
        if (f132 != f312) {
            fail(res, "n=" + std::to_string(n) + ": F(132)=" + f132.coeff_list() +
                          " != F(312)=" + f312.coeff_list());
            return res;
        }
        std::string line = "n=" + std::to_string(n) + " F(312)=F(132)=" +
                           f312.coeff_list() + " = narayana ok";
        if (n <= 7) {
            const std::vector<std::set<std::pair<int, int>>> meshes = {
                {{2, 2}},
                {{0, 1}},
                {{1, 1}, {1, 2}},
                {{1, 1}, {1, 2}, {2, 1}, {2, 2}},
                {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
            };
            AvoidanceQuery plain;
            plain.n = n;
            plain.patterns = one_item(p132);
            const std::vector<Permutation> base_av = avoiders(plain, jobs);
            for (const auto& boxes : meshes) {
                const MeshPattern mp = make_mesh(p132, boxes);
                AvoidanceQuery q;
                q.n = n;
                q.patterns = one_item(mp);
                if (avoiders(q, jobs) != base_av) {
                    fail(res, "n=" + std::to_string(n) + ": Av(" + format_pattern_item(mp) +
                                  ") differs from Av(132)");
                    return res;
                }
            }
            line += "; five diagonal-free meshes give Av(132) ok";
        }
        lines.push_back(line);
    }
    return res;
}

CheckResult check_conj4_2(int max_n, int jobs, std::vector<std::string>& lines) {
    CheckResult res;
    PatternSet left;
    left.items.push_back(Permutation({2, 3, 4, 1}));
    left.items.push_back(make_mesh(Permutation({3, 2, 4, 1}), {{1, 4}}));
    PatternSet right;
    right.items.push_back(Permutation({2, 4, 1, 3}));
    right.items.push_back(make_mesh(Permutation({3, 1, 4, 2}), {{2, 2}}));
    for (int n = 2; n <= max_n; ++n) {
        const QPolynomial fl = stat_polynomial(n, left, StatKind::des, jobs);
        const QPolynomial fr = stat_polynomial(n, right, StatKind::des, jobs);
        const QPolynomial expected = bona_w2_poly(n);
        if (fl != fr || fl != expected) {
            fail(res, "n=" + std::to_string(n) + ": F(left)=" + fl.coeff_list() +
                          " F(right)=" + fr.coeff_list() + " closed form " +
                          expected.coeff_list());
            return res;
        }
        lines.push_back("n=" + std::to_string(n) +
                        " F({2341,3241|(1,4)})=F({2413,3142|(2,2)})=" +
                        expected.coeff_list() + " ok");
    }
    return res;
}

CheckResult check_w2_sortable(int max_n, int jobs, std::vector<std::string>& lines) {
    CheckResult res;
    PatternSet left;
    left.items.push_back(Permutation({2, 3, 4, 1}));
    left.items.push_back(make_mesh(Permutation({3, 2, 4, 1}), {{1, 4}}));
    for (int n = 2; n <= max_n; ++n) {
        AvoidanceQuery q;
        q.n = n;
        q.patterns = left;
        const std::vector<Permutation> av = avoiders(q, jobs);
        std::vector<Permutation> sortable;
        std::vector<int> a(static_cast<std::size_t>(n));
        std::iota(a.begin(), a.end(), 1);
        do {
            Permutation sigma(a);
            if (is_west_t_stack_sortable(sigma, 2)) sortable.push_back(std::move(sigma));
        } while (std::next_permutation(a.begin(), a.end()));
        if (av != sortable) {
            fail(res, "n=" + std::to_string(n) +
                          ": Av({2341,3241|(1,4)}) differs from the West-2-sortable set");
            return res;
        }
        lines.push_back("n=" + std::to_string(n) + " Av({2341,3241|(1,4)}) = West-2-sortable set (" +
                        std::to_string(av.size()) + " elements) ok");
    }
    return res;
}

CheckResult check_sanity(int max_n, int jobs, std::vector<std::string>& lines) {
    CheckResult res;
    const Permutation p132({1, 3, 2});
    const Permutation p123({1, 2, 3});
    for (int n = 0; n <= std::min(max_n, 10); ++n) {
        const BigInt a132 =
            stat_polynomial(n, one_item(p132), StatKind::des, jobs).coeff_sum();
        const BigInt a123 =
            stat_polynomial(n, one_item(p123), StatKind::des, jobs).coeff_sum();
        const BigInt cat = catalan(n);
        if (a132 != cat || a123 != cat) {
            fail(res, "n=" + std::to_string(n) + ": |Av(132)|=" + a132.str() +
                          " |Av(123)|=" + a123.str() + " catalan=" + cat.str());
            return res;
        }
        lines.push_back("n=" + std::to_string(n) + " |Av(132)|=|Av(123)|=catalan=" +
                        cat.str() + " ok");
    }
    const PatternSet empty_set;
    for (int n = 0; n <= std::min(max_n, 7); ++n) {
        const QPolynomial fdes = stat_polynomial(n, empty_set, StatKind::des, jobs);
        const QPolynomial fexc = stat_polynomial(n, empty_set, StatKind::exc, jobs);
        const QPolynomial finv = stat_polynomial(n, empty_set, StatKind::inv, jobs);
        const QPolynomial fmaj = stat_polynomial(n, empty_set, StatKind::maj, jobs);
        if (fdes != eulerian_poly(n) || fexc != fdes) {
            fail(res, "n=" + std::to_string(n) + ": des/exc polynomials disagree with A_n");
            return res;
        }
        if (finv != q_factorial(n) || fmaj != finv) {
            fail(res, "n=" + std::to_string(n) + ": inv/maj polynomials disagree with [n]_q!");
            return res;
        }
        lines.push_back("n=" + std::to_string(n) + " F^des=F^exc=A_n and F^inv=F^maj=[n]_q! ok");
    }
    return res;
}

} // namespace

RunReport run_verify(const VerifyCheck& check, int jobs) {
    if (check.max_n < 2) throw DomainError("max_n must be at least 2");
    RunReport report;
    report.check = check.name;
    const auto start = std::chrono::steady_clock::now();
    CheckResult res;
    switch (check.name) {
        case CheckName::table1:
            report.n_lo = 4;
            report.n_hi = std::min(check.max_n, 8);
            res = check_table1(check.max_n, jobs, report.lines);
            break;
        case CheckName::conj4_1:
            report.n_lo = 2;
            report.n_hi = check.max_n;
            res = check_conj4_1(check.max_n, jobs, report.lines);
            break;
        case CheckName::prop3_3:
            report.n_lo = 1;
            report.n_hi = check.max_n;
            res = check_prop3_3(check.max_n, jobs, report.lines);
            break;
        case CheckName::thm3_4:
            report.n_lo = 0;
            report.n_hi = check.max_n;
            res = check_thm3_4(check.max_n, jobs, report.lines);
            break;
        case CheckName::prop3_5:
            report.n_lo = 0;
            report.n_hi = check.max_n;
            res = check_prop3_5(check.max_n, jobs, report.lines);
            break;
        case CheckName::thm3_2:
            report.n_lo = 2;
            report.n_hi = check.max_n;
            res = check_thm3_2(check.max_n, jobs, report.lines);
            break;
        case CheckName::prop3_1:
            report.n_lo = 1;
            report.n_hi = check.max_n;
            res = check_prop3_1(check.max_n, jobs, report.lines);
            break;
        case CheckName::conj4_2:
            report.n_lo = 2;
            report.n_hi = check.max_n;
            res = check_conj4_2(check.max_n, jobs, report.lines);
            break;
        case CheckName::w2_sortable:
            report.n_lo = 2;
            report.n_hi = check.max_n;
            res = check_w2_sortable(check.max_n, jobs, report.lines);
            break;
        case CheckName::sanity:
            report.n_lo = 0;
            report.n_hi = std::min(check.max_n, 10);
            res = check_sanity(check.max_n, jobs, report.lines);
            break;
    }
    const auto stop = std::chrono::steady_clock::now();
    report.wall_seconds = std::chrono::duration<double>(stop - start).count();
    report.pass = res.pass;
    report.counterexample = res.counterexample;
    return report;
}

std::string render_report(const RunReport& report) {
    std::string out = "verify " + to_string(report.check) + " range " +
                      std::to_string(report.n_lo) + ".." + std::to_string(report.n_hi) + "\n";
    for (const std::string& line : report.lines) out += "  " + line + "\n";
    out += report.pass ? "PASS\n" : "FAIL: " + report.counterexample + "\n";
    return out;
}

} // namespace permstat
