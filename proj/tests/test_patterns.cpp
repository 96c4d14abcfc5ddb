#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "permstat/patterns.hpp"

using namespace permstat;

namespace {

Permutation P(std::initializer_list<int> v) { return Permutation(std::vector<int>(v)); }

const MeshPattern& worked_mesh() {
    static const MeshPattern p = make_mesh(
        P({4, 2, 1, 3}), {{0, 2}, {1, 0}, {1, 1}, {3, 3}, {3, 4}, {4, 3}});
    return p;
}

} // namespace

TEST_CASE("occurrences in lexicographic index order") {
    const auto occ1 = occurrences(P({6, 1, 2, 4, 3, 5}), P({4, 2, 1, 3}));
    CHECK(std::find(occ1.begin(), occ1.end(), Occurrence{1, 4, 5, 6}) != occ1.end());
    CHECK(std::is_sorted(occ1.begin(), occ1.end()));
    CHECK(occurrences(P({1, 2, 3}), P({2, 1})).empty());
    const auto occ2 = occurrences(P({1, 5, 3, 6, 2, 4}), P({4, 2, 1, 3}));
    CHECK(std::find(occ2.begin(), occ2.end(), Occurrence{2, 3, 5, 6}) != occ2.end());
    const auto all21 = occurrences(P({2, 1, 3}), P({2, 1}));
    CHECK(all21 == std::vector<Occurrence>{{1, 2}});
    CHECK(occurrences(P({2, 1}), P({1, 2, 3})).empty());
}

TEST_CASE("mesh regions decide an occurrence") {
    CHECK_FALSE(occurrence_satisfies_mesh(P({6, 1, 2, 4, 3, 5}), {1, 4, 5, 6}, worked_mesh()));
    CHECK(occurrence_satisfies_mesh(P({1, 5, 3, 6, 2, 4}), {2, 3, 5, 6}, worked_mesh()));
    const MeshPattern bare = make_mesh(P({4, 2, 1, 3}), {});
    CHECK(occurrence_satisfies_mesh(P({6, 1, 2, 4, 3, 5}), {1, 4, 5, 6}, bare));
}

TEST_CASE("invalid occurrences are rejected") {
    const Permutation host = P({6, 1, 2, 4, 3, 5});
    CHECK_THROWS_AS(occurrence_satisfies_mesh(host, {1, 2, 3, 4}, worked_mesh()),
                    InvalidOccurrence);
    CHECK_THROWS_AS(occurrence_satisfies_mesh(host, {1, 4, 5}, worked_mesh()),
                    InvalidOccurrence);
    CHECK_THROWS_AS(occurrence_satisfies_mesh(host, {0, 4, 5, 6}, worked_mesh()),
                    InvalidOccurrence);
    CHECK_THROWS_AS(occurrence_satisfies_mesh(host, {4, 4, 5, 6}, worked_mesh()),
                    InvalidOccurrence);
    CHECK_THROWS_AS(occurrence_satisfies_mesh(host, {1, 4, 5, 7}, worked_mesh()),
                    InvalidOccurrence);
}

TEST_CASE("containment across the three pattern kinds") {
    CHECK_FALSE(contains(P({6, 1, 2, 4, 3, 5}), PatternItem(worked_mesh())));
    CHECK(contains(P({1, 5, 3, 6, 2, 4}), PatternItem(worked_mesh())));
    CHECK_FALSE(contains(P({1, 2, 3}), PatternItem(P({2, 1}))));
    CHECK(contains(P({1, 2, 4, 6, 3, 5}),
                   PatternItem(make_barred(P({1, 3, 2, 4}), {1, 4}))));
    CHECK_FALSE(contains(P({1, 2, 4, 6, 3, 5}),
                         PatternItem(make_barred(P({1, 2, 4, 3}), {1, 2}))));
}

TEST_CASE("mesh with empty shading equals classical containment") {
    std::vector<int> a(5);
    std::iota(a.begin(), a.end(), 1);
    std::vector<int> b(3);
    std::iota(b.begin(), b.end(), 1);
    do {
        const Permutation host(a);
        std::vector<int> pat = b;
        do {
            const Permutation pi(pat);
            CHECK(contains(host, PatternItem(pi)) ==
                  contains(host, PatternItem(make_mesh(pi, {}))));
        } while (std::next_permutation(pat.begin(), pat.end()));
    } while (std::next_permutation(a.begin(), a.end()));
}

TEST_CASE("larger meshes only remove occurrences") {
    std::vector<int> boxes;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) boxes.push_back(i * 4 + j);
    std::vector<int> base = {1, 2, 3};
    std::vector<int> a(4);
    std::iota(a.begin(), a.end(), 1);
    do {
        const Permutation pi(base);
        do {
            const Permutation host(a);
            for (int b1 : boxes) {
                const std::pair<int, int> box1{b1 / 4, b1 % 4};
                const bool small = contains(host, PatternItem(make_mesh(pi, {box1})));
                for (int b2 : boxes) {
                    if (b2 == b1) continue;
                    const std::pair<int, int> box2{b2 / 4, b2 % 4};
                    const bool large =
                        contains(host, PatternItem(make_mesh(pi, {box1, box2})));
                    CHECK((!large || small));
                }
            }
        } while (std::next_permutation(a.begin(), a.end()));
    } while (std::next_permutation(base.begin(), base.end()));
}

TEST_CASE("barred avoidance on the worked host") {
    const Permutation host = P({1, 2, 4, 6, 3, 5});
    const BarredPattern b1243 = make_barred(P({1, 2, 4, 3}), {1, 2});
    const BarredPattern b1324 = make_barred(P({1, 3, 2, 4}), {1, 4});
    CHECK(avoids_barred(host, b1243));
    CHECK_FALSE(avoids_barred(host, b1324));
    const Permutation id = P({1, 2, 3, 4, 5});
    CHECK(avoids_barred(id, b1243));
    CHECK(avoids_barred(id, b1324));
    CHECK(avoids_barred(host, b1243) == !contains(host, PatternItem(b1243)));
}

TEST_CASE("only the two defined barred instances evaluate") {
    CHECK_THROWS_AS(avoids_barred(P({1, 2, 3}), make_barred(P({3, 2, 1}), {1})),
                    UnsupportedBarredPattern);
    CHECK_THROWS_AS(contains(P({1, 2, 3}), PatternItem(make_barred(P({1, 2, 4, 3}), {1}))),
                    UnsupportedBarredPattern);
    CHECK_THROWS_AS(make_barred(P({1, 2, 4, 3}), {0}), DomainError);
    CHECK_THROWS_AS(make_barred(P({1, 2, 4, 3}), {5}), DomainError);
}

TEST_CASE("enclosed diagonals of the pictured patterns") {
    const Permutation base = P({1, 3, 2});
    const auto d1 = enclosed_diagonals(make_mesh(base, {{2, 0}}));
    REQUIRE(d1.size() == 1);
    CHECK(d1[0] == EnclosedDiagonal{{2, 0}, +1, 1});
    const auto d2 = enclosed_diagonals(make_mesh(base, {{0, 0}, {1, 1}}));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0] == EnclosedDiagonal{{0, 0}, +1, 2});
    const auto d3 = enclosed_diagonals(make_mesh(base, {{1, 3}, {2, 2}, {3, 1}}));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0] == EnclosedDiagonal{{1, 3}, -1, 3});
    for (const auto& boxes : std::vector<std::set<std::pair<int, int>>>{
             {{2, 2}},
             {{0, 1}},
             {{1, 1}, {1, 2}},
             {{1, 1}, {1, 2}, {2, 1}, {2, 2}},
             {{0, 1}, {1, 1}, {2, 1}, {3, 1}}})
        CHECK(enclosed_diagonals(make_mesh(base, boxes)).empty());
}

TEST_CASE("superfluous means no enclosed diagonal") {
    const Permutation base = P({1, 3, 2});
    CHECK(is_superfluous(make_mesh(base, {{0, 1}})));
    CHECK_FALSE(is_superfluous(make_mesh(base, {{2, 0}})));
    CHECK(is_superfluous(make_mesh(base, {})));
}

TEST_CASE("mesh boxes outside the grid are rejected") {
    CHECK_THROWS_AS(make_mesh(P({1, 3, 2}), {{4, 0}}), DomainError);
    CHECK_THROWS_AS(make_mesh(P({1, 3, 2}), {{0, -1}}), DomainError);
}

TEST_CASE("pattern set grammar") {
    const PatternSet ps = parse_pattern_set("321; 231|(1,0)");
    REQUIRE(ps.items.size() == 2);
    CHECK(std::get<Permutation>(ps.items[0]) == P({3, 2, 1}));
    CHECK(std::get<MeshPattern>(ps.items[1]) == make_mesh(P({2, 3, 1}), {{1, 0}}));
    const PatternSet barred = parse_pattern_set("1'2'43");
    REQUIRE(barred.items.size() == 1);
    CHECK(std::get<BarredPattern>(barred.items[0]) ==
          make_barred(P({1, 2, 4, 3}), {1, 2}));
    const PatternSet mesh = parse_pattern_set("4213|(0,2)(1,0)(1,1)(3,3)(3,4)(4,3)");
    REQUIRE(mesh.items.size() == 1);
    CHECK(std::get<MeshPattern>(mesh.items[0]) == worked_mesh());
    CHECK(parse_pattern_set("").items.empty());
    CHECK(parse_pattern_set("  1,3,2  ").items.size() == 1);
}

TEST_CASE("grammar errors carry offsets") {
    CHECK_THROWS_AS(parse_pattern_set("12x|"), ParseError);
    try {
        parse_pattern_set("12x|");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse_pattern_set("132|(4,0)"), ParseError);
    CHECK_THROWS_AS(parse_pattern_set("132|(1,0"), ParseError);
    CHECK_THROWS_AS(parse_pattern_set("321;"), ParseError);
    CHECK_THROWS_AS(parse_pattern_set("1'32|(0,0)"), ParseError);
    CHECK_THROWS_AS(parse_pattern_set("122"), ParseError);
}

TEST_CASE("pattern text round-trips through format") {
    for (const std::string text :
         {"321", "231|(1,0)", "1'2'43", "1'324'",
          "4213|(0,2)(1,0)(1,1)(3,3)(3,4)(4,3)", "321; 231|(1,0); 1'2'43"}) {
        const PatternSet ps = parse_pattern_set(text);
        const PatternSet again = parse_pattern_set(format_pattern_set(ps));
        REQUIRE(again.items.size() == ps.items.size());
        for (std::size_t i = 0; i < ps.items.size(); ++i)
            CHECK(again.items[i] == ps.items[i]);
    }
    CHECK(format_pattern_item(PatternItem(make_barred(P({1, 3, 2, 4}), {1, 4}))) ==
          "1'324'");
}
