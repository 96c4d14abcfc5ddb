#include "permstat/qpoly.hpp"

namespace permstat {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    for (const BigInt& c : coeffs_)
        if (c < 0) throw DomainError("QPolynomial coefficients must be nonnegative");
    trim();
}

QPolynomial QPolynomial::one() {
    return QPolynomial(std::vector<BigInt>{1});
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coeff_sum() const {
    BigInt s = 0;
    for (const BigInt& c : coeffs_) s += c;
    return s;
}

void QPolynomial::add_term(std::size_t exponent, const BigInt& value) {
    if (value < 0) throw DomainError("QPolynomial coefficients must be nonnegative");
    if (exponent >= coeffs_.size()) coeffs_.resize(exponent + 1, BigInt(0));
    coeffs_[exponent] += value;
    trim();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), BigInt(0));
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPolynomial(std::move(out));
}

std::string QPolynomial::pretty() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!out.empty()) out += " + ";
        const std::string c = coeffs_[k].str();
        if (k == 0) {
            out += c;
        } else {
            if (coeffs_[k] != 1) out += c;
            out += "q";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

std::string QPolynomial::coeff_list() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out.push_back(',');
        out += coeffs_[k].str();
    }
    return out;
}

BigInt catalan(int n) {
    if (n < 0) throw DomainError("catalan requires n >= 0");
    BigInt c = 1;
    for (int i = 0; i < n; ++i) {
        c *= 2 * (2 * i + 1);
        c /= i + 2;
    }
    return c;
}

namespace {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace

BigInt narayana(int n, int k) {
    if (n < 1) throw DomainError("narayana requires n >= 1");
    if (k < 0 || k > n - 1) throw DomainError("narayana requires 0 <= k <= n-1");
    return binomial(n, k) * binomial(n, k + 1) / n;
}

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("stirling2 requires 0 <= k <= n");
    std::vector<BigInt> row{1}; // S(0,0)
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, BigInt(0));
        for (int j = 1; j <= m; ++j) {
            const BigInt same = j < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j)] : BigInt(0);
            next[static_cast<std::size_t>(j)] = j * same + row[static_cast<std::size_t>(j) - 1];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

BigInt motzkin_count(int n, int k) {
    if (n < 0 || k < 0 || 2 * k > n) return 0;
    return binomial(n, 2 * k) * catalan(k);
}

QPolynomial eulerian_poly(int n) {
    if (n < 0) throw DomainError("eulerian_poly requires n >= 0");
    std::vector<BigInt> row{1}; // A_0 = A_1 = 1
    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(m), BigInt(0));
        for (int k = 0; k < m; ++k) {
            const BigInt asc = k < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(k)] : BigInt(0);
            const BigInt dsc = (k >= 1 && k - 1 < static_cast<int>(row.size()))
                                   ? row[static_cast<std::size_t>(k) - 1]
                                   : BigInt(0);
            next[static_cast<std::size_t>(k)] = (k + 1) * asc + (m - k) * dsc;
        }
        row = std::move(next);
    }
    return QPolynomial(std::move(row));
}

QPolynomial q_factorial(int n) {
    if (n < 0) throw DomainError("q_factorial requires n >= 0");
    QPolynomial out = QPolynomial::one();
    for (int i = 2; i <= n; ++i) {
        QPolynomial bracket(std::vector<BigInt>(static_cast<std::size_t>(i), BigInt(1)));
        out = out * bracket;
    }
    return out;
}

QPolynomial bona_w2_poly(int n) {
    if (n < 1) throw DomainError("bona_w2_poly requires n >= 1");
    auto fact = [](int m) {
        BigInt f = 1;
        for (int i = 2; i <= m; ++i) f *= i;
        return f;
    };
    std::vector<BigInt> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const BigInt num = fact(n + k) * fact(2 * n - k - 1);
        const BigInt den =
            fact(k + 1) * fact(n - k) * fact(2 * k + 1) * fact(2 * n - 2 * k - 1);
        if (num % den != 0)
            throw NonIntegerTerm("bona_w2_poly term (n=" + std::to_string(n) +
                                 ", k=" + std::to_string(k) + ") is not integral");
        coeffs.push_back(num / den);
    }
    return QPolynomial(std::move(coeffs));
}

} // namespace permstat
