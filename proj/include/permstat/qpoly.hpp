#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permstat/errors.hpp"

namespace permstat {

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial in q with nonnegative integer coefficients, index =
// exponent. Canonical form carries no trailing zeros; the zero polynomial is
// the empty coefficient list.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigInt> coeffs);

    static QPolynomial one();

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
    }
    BigInt coeff_sum() const;

    void add_term(std::size_t exponent, const BigInt& value);

    QPolynomial& operator+=(const QPolynomial& other);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) {
        a += b;
        return a;
    }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    // "1 + 10q + 11q^2 + q^3" for display; "1,10,11,1" for tables.
    std::string pretty() const;
    std::string coeff_list() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

BigInt catalan(int n);
BigInt narayana(int n, int k);
BigInt stirling2(int n, int k);
// Number of Motzkin paths of length n with exactly k up-steps; 0 when 2k > n
// or either argument is negative.
BigInt motzkin_count(int n, int k);
QPolynomial eulerian_poly(int n);
QPolynomial q_factorial(int n);
// Closed form for the descent polynomial of West-2-stack-sortable
// permutations; every term divides exactly or NonIntegerTerm is thrown.
QPolynomial bona_w2_poly(int n);

} // namespace permstat
