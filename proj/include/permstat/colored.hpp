#pragma once

#include <string>
#include <vector>

#include "permstat/perm.hpp"
#include "permstat/qpoly.hpp"

namespace permstat {

// A permutation together with a color in Z_r on each position.
class ColoredPermutation {
public:
    ColoredPermutation() = default;
    ColoredPermutation(int r, std::vector<int> colors, Permutation perm);

    int modulus() const { return r_; }
    const std::vector<int>& colors() const { return colors_; }
    const Permutation& perm() const { return perm_; }
    std::size_t size() const { return perm_.size(); }

    friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

private:
    int r_ = 1;
    std::vector<int> colors_;
    Permutation perm_;
};

// Containment: an index subsequence standardizing to the pattern whose host
// colors equal the pattern colors position by position.
bool colored_contains(const ColoredPermutation& host, const ColoredPermutation& pat);

// Statistic polynomial over all r^n * n! colored permutations avoiding every
// pattern; the statistic is taken on the underlying permutation.
QPolynomial colored_stat_polynomial(int r, int n,
                                    const std::vector<ColoredPermutation>& patterns,
                                    StatKind kind);

// Text form: "r=2: 0,1,0 / 231".
ColoredPermutation parse_colored(const std::string& text);
std::string format_colored(const ColoredPermutation& cp);

} // namespace permstat
