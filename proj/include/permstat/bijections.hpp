#pragma once

#include <string>
#include <vector>

#include "permstat/patterns.hpp"
#include "permstat/perm.hpp"

namespace permstat {

// Blocks partition [n]; canonical form sorts each block ascending and orders
// blocks by increasing minimum.
class SetPartition {
public:
    SetPartition() = default;
    explicit SetPartition(std::vector<std::vector<int>> blocks);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    std::size_t ground_size() const { return n_; }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    std::vector<std::vector<int>> blocks_;
    std::size_t n_ = 0;
};

// Text form: {{3,4},{2,7},{1,5,6}} - any block order parses, canonical order
// formats.
SetPartition parse_set_partition(const std::string& text);
std::string format_set_partition(const SetPartition& sp);

enum class Step { Up, Down, Horizontal };

// Lattice path over {U, D, H}: every prefix has #U >= #D and the totals are
// equal.
class MotzkinPath {
public:
    MotzkinPath() = default;
    explicit MotzkinPath(std::vector<Step> steps);

    const std::vector<Step>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }

    friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;

private:
    std::vector<Step> steps_;
};

// Text form: string over U, D, H (e.g. "HUUDHDHUHD").
MotzkinPath parse_motzkin_path(const std::string& text);
std::string format_motzkin_path(const MotzkinPath& p);

// Maximal increasing runs of a permutation avoiding 132|(2,0), as a set
// partition with des+1 blocks.
SetPartition partition_from_avoider(const Permutation& sigma);
// Inverse: blocks ordered by increasing minimum, concatenated in reverse
// block order, each block ascending.
Permutation avoider_from_partition(const SetPartition& sp);

// Step at value v is Up for a descent bottom, Down for a descent top,
// Horizontal otherwise; defined on avoiders of {321, 231|(1,0)}.
MotzkinPath motzkin_from_avoider(const Permutation& sigma);
// Inverse: write 1..n skipping down-step labels, then insert the i-th
// down-step label immediately before the i-th up-step label.
Permutation avoider_from_motzkin(const MotzkinPath& p);

// Descent-preserving bijections between the containment classes of
// 3124, 2314 and 2413, each with grid columns 1 and 2 fully shaded.
// Permutations in both source and target classes are fixed; the rest are
// matched up by lexicographic rank inside each (class difference, descent
// count) cell, which is bijective because the cells are equinumerous.
// Supported for n <= 10.
Permutation alpha_31_to_23(const Permutation& sigma);
Permutation beta_23_to_31(const Permutation& sigma);
Permutation alpha_24_to_23(const Permutation& sigma);

// Membership tests for those containment classes.
bool contains_3124_shaded(const Permutation& sigma);
bool contains_2314_shaded(const Permutation& sigma);
bool contains_2413_shaded(const Permutation& sigma);

// One pass of stack sorting: Gamma(L n R) = Gamma(L) Gamma(R) n.
Permutation stack_sort(const Permutation& sigma);

// True when t applications of stack_sort reach the identity.
bool is_west_t_stack_sortable(const Permutation& sigma, int t);

} // namespace permstat
