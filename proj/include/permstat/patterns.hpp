#pragma once

#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "permstat/perm.hpp"

namespace permstat {

// Base permutation of length k plus shaded boxes M in [0,k]^2. A classical
// pattern is the mesh = {} case.
struct MeshPattern {
    Permutation base;
    std::set<std::pair<int, int>> mesh;

    friend bool operator==(const MeshPattern&, const MeshPattern&) = default;
};

MeshPattern make_mesh(Permutation base, std::set<std::pair<int, int>> mesh);

// Base permutation plus barred positions (1-indexed). Avoidance semantics
// exist only for 1'2'43 and 1'324'; everything else parses but cannot be
// evaluated.
struct BarredPattern {
    Permutation base;
    std::set<int> barred;

    friend bool operator==(const BarredPattern&, const BarredPattern&) = default;
};

BarredPattern make_barred(Permutation base, std::set<int> barred);

using PatternItem = std::variant<Permutation, MeshPattern, BarredPattern>;

struct PatternSet {
    std::vector<PatternItem> items;
};

// Strictly increasing 1-indexed positions into a host permutation.
using Occurrence = std::vector<int>;

struct EnclosedDiagonal {
    std::pair<int, int> anchor;
    int direction; // +1 or -1
    int length;

    friend bool operator==(const EnclosedDiagonal&, const EnclosedDiagonal&) = default;
};

// All occurrences of the classical pattern pi in sigma, in lexicographic
// index order.
std::vector<Occurrence> occurrences(const Permutation& sigma, const Permutation& pi);

// Region test for one occurrence: every shaded box, stretched into sigma's
// plot between neighbouring occurrence columns/rows (with sentinels 0 and
// n+1), must contain no point of the plot.
bool occurrence_satisfies_mesh(const Permutation& sigma, const Occurrence& occ,
                               const MeshPattern& p);

bool contains(const Permutation& sigma, const PatternItem& item);
bool contains_any(const Permutation& sigma, const PatternSet& items);

bool avoids_barred(const Permutation& sigma, const BarredPattern& b);

std::vector<EnclosedDiagonal> enclosed_diagonals(const MeshPattern& p);
bool is_superfluous(const MeshPattern& p);

// Grammar: items joined by ';'. Item forms:
//   classical   4213         or 1,2,4,3
//   mesh        4213|(0,2)(1,0)
//   barred      1'2'43       (apostrophe bars the letter before it)
// Whitespace around tokens is ignored.
PatternSet parse_pattern_set(const std::string& text);
std::string format_pattern_item(const PatternItem& item);
std::string format_pattern_set(const PatternSet& ps);

// Fast predicates used by the enumeration loops: host letters given as a raw
// vector (a valid permutation word).
bool contains_raw(const std::vector<int>& host, const PatternItem& item);
bool contains_any_raw(const std::vector<int>& host, const PatternSet& items);

} // namespace permstat
