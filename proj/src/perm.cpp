#include "permstat/perm.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace permstat {

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
    const int n = static_cast<int>(letters_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : letters_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw InvalidPermutation("letters must be a bijection on [n]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    std::vector<int> s(letters_);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw DuplicateLetter("word letters must be distinct");
    for (int v : letters_)
        if (v < 1) throw DuplicateLetter("word letters must be positive");
}

std::vector<int> Word::support() const {
    std::vector<int> s(letters_);
    std::sort(s.begin(), s.end());
    return s;
}

std::string to_string(DihedralElement f) {
    switch (f) {
        case DihedralElement::R0: return "R0";
        case DihedralElement::R90: return "R90";
        case DihedralElement::R180: return "R180";
        case DihedralElement::R270: return "R270";
        case DihedralElement::r_minus1: return "r-1";
        case DihedralElement::r_0: return "r0";
        case DihedralElement::r_1: return "r1";
        case DihedralElement::r_inf: return "rinf";
    }
    return "?";
}

DihedralElement dihedral_from_string(const std::string& name) {
    for (DihedralElement f : kAllDihedral)
        if (to_string(f) == name) return f;
    throw DomainError("unknown dihedral element: " + name);
}

namespace {

// Centered-coordinate matrix ((a,b),(c,d)): (u,v) -> (a*u+b*v, c*u+d*v).
struct Mat {
    int a, b, c, d;
    friend bool operator==(const Mat&, const Mat&) = default;
};

Mat matrix_of(DihedralElement f) {
    switch (f) {
        case DihedralElement::R0: return {1, 0, 0, 1};
        case DihedralElement::R90: return {0, -1, 1, 0};
        case DihedralElement::R180: return {-1, 0, 0, -1};
        case DihedralElement::R270: return {0, 1, -1, 0};
        case DihedralElement::r_minus1: return {0, -1, -1, 0};
        case DihedralElement::r_0: return {1, 0, 0, -1};
        case DihedralElement::r_1: return {0, 1, 1, 0};
        case DihedralElement::r_inf: return {-1, 0, 0, 1};
    }
    return {1, 0, 0, 1};
}

Mat mul(const Mat& f, const Mat& g) {
    return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
            f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
}

} // namespace

DihedralElement compose(DihedralElement f, DihedralElement g) {
    const Mat m = mul(matrix_of(f), matrix_of(g));
    for (DihedralElement h : kAllDihedral)
        if (matrix_of(h) == m) return h;
    throw DomainError("dihedral composition fell outside the group");
}

std::string to_string(StatKind k) {
    switch (k) {
        case StatKind::des: return "des";
        case StatKind::inv: return "inv";
        case StatKind::maj: return "maj";
        case StatKind::exc: return "exc";
    }
    return "?";
}

StatKind stat_from_string(const std::string& name) {
    if (name == "des") return StatKind::des;
    if (name == "inv") return StatKind::inv;
    if (name == "maj") return StatKind::maj;
    if (name == "exc") return StatKind::exc;
    throw DomainError("unknown statistic: " + name);
}

Permutation standardize(const Word& w) {
    const auto& a = w.letters();
    std::vector<int> idx(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return a[i] < a[j]; });
    std::vector<int> out(a.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        out[static_cast<std::size_t>(idx[r])] = static_cast<int>(r) + 1;
    return Permutation(std::move(out));
}

Permutation apply_dihedral(DihedralElement f, const Permutation& p) {
    const int n = static_cast<int>(p.size());
    if (n == 0) return {};
    const Mat m = matrix_of(f);
    // Work in doubled centered coordinates to stay integral: u = 2x-(n+1).
    std::vector<std::pair<int, int>> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
        const int u = 2 * x - (n + 1);
        const int v = 2 * p.at(static_cast<std::size_t>(x)) - (n + 1);
        const int u2 = m.a * u + m.b * v;
        const int v2 = m.c * u + m.d * v;
        pts.emplace_back((u2 + n + 1) / 2, (v2 + n + 1) / 2);
    }
    std::sort(pts.begin(), pts.end());
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (const auto& [x, y] : pts) out.push_back(y);
    return Permutation(std::move(out));
}

Word apply_dihedral_relative(DihedralElement f, const Word& w) {
    if (w.size() == 0) return w;
    const Permutation q = apply_dihedral(f, standardize(w));
    const std::vector<int> sup = w.support();
    std::vector<int> out;
    out.reserve(w.size());
    for (std::size_t i = 1; i <= q.size(); ++i)
        out.push_back(sup[static_cast<std::size_t>(q.at(i)) - 1]);
    return Word(std::move(out));
}

std::set<int> descent_set(const Permutation& p) {
    std::set<int> out;
    for (std::size_t i = 1; i + 1 <= p.size(); ++i)
        if (p.at(i) > p.at(i + 1)) out.insert(static_cast<int>(i));
    return out;
}

int des_raw(const std::vector<int>& a) {
    int d = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] > a[i + 1]) ++d;
    return d;
}

int inv_raw(const std::vector<int>& a) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] > a[j]) ++c;
    return c;
}

int maj_raw(const std::vector<int>& a) {
    int m = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] > a[i + 1]) m += static_cast<int>(i) + 1;
    return m;
}

int exc_raw(const std::vector<int>& a) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > static_cast<int>(i) + 1) ++c;
    return c;
}

long long stat_raw(StatKind kind, const std::vector<int>& a) {
    switch (kind) {
        case StatKind::des: return des_raw(a);
        case StatKind::inv: return inv_raw(a);
        case StatKind::maj: return maj_raw(a);
        case StatKind::exc: return exc_raw(a);
    }
    return 0;
}

long long stat(StatKind kind, const Permutation& p) {
    return stat_raw(kind, p.letters());
}

std::set<int> descent_tops(const Permutation& p) {
    std::set<int> out;
    for (std::size_t i = 1; i + 1 <= p.size(); ++i)
        if (p.at(i) > p.at(i + 1)) out.insert(p.at(i));
    return out;
}

std::set<int> descent_bottoms(const Permutation& p) {
    std::set<int> out;
    for (std::size_t i = 1; i + 1 <= p.size(); ++i)
        if (p.at(i) > p.at(i + 1)) out.insert(p.at(i + 1));
    return out;
}

std::set<int> valleys(const Permutation& p) {
    std::set<int> out;
    for (std::size_t i = 2; i + 1 <= p.size(); ++i)
        if (p.at(i - 1) > p.at(i) && p.at(i) < p.at(i + 1))
            out.insert(static_cast<int>(i));
    return out;
}

Permutation parse_permutation(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) return {};
    std::vector<int> letters;
    if (t.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos < t.size()) {
            std::size_t end = t.find(',', pos);
            if (end == std::string::npos) end = t.size();
            const std::string tok = t.substr(pos, end - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("expected integer in permutation", pos);
            letters.push_back(std::stoi(tok));
            pos = end + 1;
        }
        if (!t.empty() && t.back() == ',')
            throw ParseError("trailing comma in permutation", t.size() - 1);
    } else {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '0')
                throw ParseError("expected digit 1-9 in permutation", i);
            letters.push_back(t[i] - '0');
        }
    }
    try {
        return Permutation(std::move(letters));
    } catch (const InvalidPermutation& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string format_permutation(const Permutation& p) {
    std::string out;
    if (p.size() <= 9) {
        for (int v : p.letters()) out.push_back(static_cast<char>('0' + v));
    } else {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(p.letters()[i]);
        }
    }
    return out;
}

} // namespace permstat
