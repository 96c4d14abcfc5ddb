#include "permstat/colored.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace permstat {

ColoredPermutation::ColoredPermutation(int r, std::vector<int> colors, Permutation perm)
    : r_(r), colors_(std::move(colors)), perm_(std::move(perm)) {
    if (r_ < 1) throw DomainError("color modulus must be at least 1");
    if (colors_.size() != perm_.size())
        throw DomainError("color vector and permutation must have equal length");
    for (int c : colors_)
        if (c < 0 || c >= r_) throw DomainError("color outside 0..r-1");
}

bool colored_contains(const ColoredPermutation& host, const ColoredPermutation& pat) {
    for (int c : pat.colors())
        if (c >= host.modulus())
            throw ModulusMismatch("pattern color exceeds host modulus");
    const auto& hp = host.perm().letters();
    const auto& pp = pat.perm().letters();
    const std::size_t n = hp.size();
    const std::size_t k = pp.size();
    if (k == 0) return true;
    if (k > n) return false;
    std::vector<int> chosen;
    chosen.reserve(k);
    std::function<bool(std::size_t)> go = [&](std::size_t start) -> bool {
        const std::size_t t = chosen.size();
        if (t == k) return true;
        for (std::size_t p = start; p + (k - t) <= n; ++p) {
            if (host.colors()[p] != pat.colors()[t]) continue;
            const int v = hp[p];
            bool ok = true;
            for (std::size_t s = 0; s < t && ok; ++s)
                ok = (chosen[s] < v) == (pp[s] < pp[t]);
            if (!ok) continue;
            chosen.push_back(v);
            if (go(p + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return go(0);
}

QPolynomial colored_stat_polynomial(int r, int n,
                                    const std::vector<ColoredPermutation>& patterns,
                                    StatKind kind) {
    if (r < 1) throw DomainError("color modulus must be at least 1");
    if (n < 0) throw DomainError("length must be nonnegative");
    QPolynomial f;
    std::vector<int> letters(static_cast<std::size_t>(n));
    std::iota(letters.begin(), letters.end(), 1);
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    do {
        const Permutation sigma(letters);
        const auto s = static_cast<std::size_t>(stat_raw(kind, letters));
        std::fill(colors.begin(), colors.end(), 0);
        for (;;) {
            const ColoredPermutation host(r, colors, sigma);
            bool hit = false;
            for (const auto& pat : patterns)
                if (colored_contains(host, pat)) {
                    hit = true;
                    break;
                }
            if (!hit) f.add_term(s, 1);
            // Odometer step over color vectors.
            int i = n - 1;
            while (i >= 0 && colors[static_cast<std::size_t>(i)] == r - 1) {
                colors[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++colors[static_cast<std::size_t>(i)];
        }
    } while (std::next_permutation(letters.begin(), letters.end()));
    return f;
}

ColoredPermutation parse_colored(const std::string& text) {
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    const auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    };
    const auto read_int = [&] {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) throw ParseError("expected an integer", start);
        return std::stoi(text.substr(start, pos - start));
    };
    expect('r');
    expect('=');
    const int r = read_int();
    expect(':');
    std::vector<int> colors;
    skip_ws();
    while (pos < text.size() && text[pos] != '/') {
        colors.push_back(read_int());
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            skip_ws();
        }
    }
    expect('/');
    skip_ws();
    Permutation perm;
    if (pos < text.size()) {
        const std::size_t perm_start = pos;
        try {
            perm = parse_permutation(text.substr(pos));
        } catch (const ParseError& e) {
            throw ParseError(e.raw(), perm_start + e.offset());
        }
        pos = text.size();
    }
    try {
        return ColoredPermutation(r, std::move(colors), std::move(perm));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string format_colored(const ColoredPermutation& cp) {
    std::string out = "r=" + std::to_string(cp.modulus()) + ": ";
    for (std::size_t i = 0; i < cp.colors().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(cp.colors()[i]);
    }
    out += " / ";
    out += format_permutation(cp.perm());
    return out;
}

} // namespace permstat
