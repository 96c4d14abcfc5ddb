#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "permstat/errors.hpp"

namespace permstat {

// One-line notation a_1...a_n over [n], 1-indexed positions and values.
// The empty permutation (n = 0) is legal; every statistic of it is 0.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    // 1-indexed access: at(i) = a_i.
    int at(std::size_t i) const { return letters_[i - 1]; }
    const std::vector<int>& letters() const { return letters_; }

    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<int> letters_;
};

// A word with distinct positive letters over an arbitrary support set.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    std::size_t size() const { return letters_.size(); }
    const std::vector<int>& letters() const { return letters_; }
    // Sorted support set.
    std::vector<int> support() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
};

// The eight plot symmetries: rotations and reflections of the n x n grid.
// r_0 is complement, r_inf is reversal, r_1 is inverse.
enum class DihedralElement { R0, R90, R180, R270, r_minus1, r_0, r_1, r_inf };

constexpr DihedralElement kAllDihedral[] = {
    DihedralElement::R0,       DihedralElement::R90, DihedralElement::R180,
    DihedralElement::R270,     DihedralElement::r_minus1,
    DihedralElement::r_0,      DihedralElement::r_1, DihedralElement::r_inf,
};

std::string to_string(DihedralElement f);
DihedralElement dihedral_from_string(const std::string& name);
DihedralElement compose(DihedralElement f, DihedralElement g); // f after g

enum class StatKind { des, inv, maj, exc };

std::string to_string(StatKind k);
StatKind stat_from_string(const std::string& name);

Permutation standardize(const Word& w);

Permutation apply_dihedral(DihedralElement f, const Permutation& p);
// Same support as w; standardize(result) = f(standardize(w)).
Word apply_dihedral_relative(DihedralElement f, const Word& w);

std::set<int> descent_set(const Permutation& p);
long long stat(StatKind kind, const Permutation& p);

std::set<int> descent_tops(const Permutation& p);
std::set<int> descent_bottoms(const Permutation& p);
// Positions i with a_{i-1} > a_i < a_{i+1}.
std::set<int> valleys(const Permutation& p);

// Raw helpers shared by the enumeration loops; letters must already form a
// valid permutation word.
int des_raw(const std::vector<int>& a);
int inv_raw(const std::vector<int>& a);
int maj_raw(const std::vector<int>& a);
int exc_raw(const std::vector<int>& a);
long long stat_raw(StatKind kind, const std::vector<int>& a);

// Text forms: contiguous digits for n <= 9 ("342516"), comma-separated for
// any n ("1,4,2,6,3,5,7,10,8,9"). Both parse; comma form is canonical output
// for n >= 10.
Permutation parse_permutation(const std::string& text);
std::string format_permutation(const Permutation& p);

} // namespace permstat
