#include "permstat/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace permstat {

MeshPattern make_mesh(Permutation base, std::set<std::pair<int, int>> mesh) {
    const int k = static_cast<int>(base.size());
    for (const auto& [i, j] : mesh)
        if (i < 0 || i > k || j < 0 || j > k)
            throw DomainError("mesh box outside [0,k]^2");
    return MeshPattern{std::move(base), std::move(mesh)};
}

BarredPattern make_barred(Permutation base, std::set<int> barred) {
    const int k = static_cast<int>(base.size());
    for (int pos : barred)
        if (pos < 1 || pos > k)
            throw DomainError("barred position outside the base pattern");
    return BarredPattern{std::move(base), std::move(barred)};
}

namespace {

// Does appending value v to the chosen host values keep the prefix
// order-isomorphic to the pattern? chosen[s] plays pat[s].
bool extends_prefix(const std::vector<int>& chosen, const std::vector<int>& pat,
                    std::size_t t, int v) {
    for (std::size_t s = 0; s < t; ++s)
        if ((chosen[s] < v) != (pat[s] < pat[t])) return false;
    return true;
}

bool mesh_regions_empty(const std::vector<int>& host, const std::vector<int>& occ,
                        const std::set<std::pair<int, int>>& mesh) {
    const int n = static_cast<int>(host.size());
    const int k = static_cast<int>(occ.size());
    std::vector<int> pos(static_cast<std::size_t>(k) + 2);
    std::vector<int> vals(static_cast<std::size_t>(k) + 2);
    pos[0] = 0;
    vals[0] = 0;
    for (int t = 1; t <= k; ++t) {
        pos[static_cast<std::size_t>(t)] = occ[static_cast<std::size_t>(t) - 1];
        vals[static_cast<std::size_t>(t)] =
            host[static_cast<std::size_t>(occ[static_cast<std::size_t>(t) - 1]) - 1];
    }
    pos[static_cast<std::size_t>(k) + 1] = n + 1;
    std::sort(vals.begin() + 1, vals.end() - 1);
    vals[static_cast<std::size_t>(k) + 1] = n + 1;
    for (const auto& [a, b] : mesh) {
        const int plo = pos[static_cast<std::size_t>(a)];
        const int phi = pos[static_cast<std::size_t>(a) + 1];
        const int vlo = vals[static_cast<std::size_t>(b)];
        const int vhi = vals[static_cast<std::size_t>(b) + 1];
        for (int p = plo + 1; p < phi; ++p) {
            const int v = host[static_cast<std::size_t>(p) - 1];
            if (vlo < v && v < vhi) return false;
        }
    }
    return true;
}

// Backtracking over index subsequences in lexicographic order. Calls sink on
// each complete occurrence; sink returns true to stop the search.
bool scan_occurrences(const std::vector<int>& host, const std::vector<int>& pat,
                      const std::function<bool(const std::vector<int>&)>& sink) {
    const std::size_t n = host.size();
    const std::size_t k = pat.size();
    if (k == 0) throw DomainError("pattern must be nonempty");
    if (k > n) return false;
    std::vector<int> occ;      // 1-indexed positions
    std::vector<int> chosen;   // corresponding values
    occ.reserve(k);
    chosen.reserve(k);
    std::function<bool(std::size_t)> go = [&](std::size_t start) -> bool {
        const std::size_t t = occ.size();
        if (t == k) return sink(occ);
        for (std::size_t p = start; p + (k - t) <= n + 1; ++p) {
            const int v = host[p - 1];
            if (!extends_prefix(chosen, pat, t, v)) continue;
            occ.push_back(static_cast<int>(p));
            chosen.push_back(v);
            if (go(p + 1)) return true;
            occ.pop_back();
            chosen.pop_back();
        }
        return false;
    };
    go(1);
    return true;
}

bool contains_classical_raw(const std::vector<int>& host, const std::vector<int>& pat) {
    bool found = false;
    scan_occurrences(host, pat, [&](const std::vector<int>&) {
        found = true;
        return true;
    });
    return found;
}

bool contains_mesh_raw(const std::vector<int>& host, const std::vector<int>& pat,
                       const std::set<std::pair<int, int>>& mesh) {
    bool found = false;
    scan_occurrences(host, pat, [&](const std::vector<int>& occ) {
        if (mesh_regions_empty(host, occ, mesh)) {
            found = true;
            return true;
        }
        return false;
    });
    return found;
}

bool avoids_barred_1243_raw(const std::vector<int>& host) {
    const int n = static_cast<int>(host.size());
    // m[i] = least value a_l with l < i (0-based) preceded by a smaller letter.
    std::vector<int> m(static_cast<std::size_t>(n) + 1, n + 1);
    int run_min = n + 1;
    int best = n + 1;
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i)] = best;
        if (host[static_cast<std::size_t>(i)] > run_min)
            best = std::min(best, host[static_cast<std::size_t>(i)]);
        run_min = std::min(run_min, host[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (host[static_cast<std::size_t>(i)] > host[static_cast<std::size_t>(j)] &&
                m[static_cast<std::size_t>(i)] >= host[static_cast<std::size_t>(j)])
                return false;
    return true;
}

bool avoids_barred_1324_raw(const std::vector<int>& host) {
    const int n = static_cast<int>(host.size());
    std::vector<int> pref_min(static_cast<std::size_t>(n), n + 1);
    std::vector<int> suf_max(static_cast<std::size_t>(n), 0);
    int cur = n + 1;
    for (int i = 0; i < n; ++i) {
        pref_min[static_cast<std::size_t>(i)] = cur;
        cur = std::min(cur, host[static_cast<std::size_t>(i)]);
    }
    cur = 0;
    for (int j = n - 1; j >= 0; --j) {
        suf_max[static_cast<std::size_t>(j)] = cur;
        cur = std::max(cur, host[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (host[static_cast<std::size_t>(i)] > host[static_cast<std::size_t>(j)]) {
                if (pref_min[static_cast<std::size_t>(i)] >= host[static_cast<std::size_t>(j)])
                    return false;
                if (suf_max[static_cast<std::size_t>(j)] <= host[static_cast<std::size_t>(i)])
                    return false;
            }
    return true;
}

enum class BarredKind { b1243, b1324 };

BarredKind classify_barred(const BarredPattern& b) {
    static const Permutation p1243({1, 2, 4, 3});
    static const Permutation p1324({1, 3, 2, 4});
    if (b.base == p1243 && b.barred == std::set<int>{1, 2}) return BarredKind::b1243;
    if (b.base == p1324 && b.barred == std::set<int>{1, 4}) return BarredKind::b1324;
    throw UnsupportedBarredPattern(
        "avoidance is defined only for 1'2'43 and 1'324'");
}

bool avoids_barred_raw(const std::vector<int>& host, const BarredPattern& b) {
    switch (classify_barred(b)) {
        case BarredKind::b1243: return avoids_barred_1243_raw(host);
        case BarredKind::b1324: return avoids_barred_1324_raw(host);
    }
    return false;
}

} // namespace

std::vector<Occurrence> occurrences(const Permutation& sigma, const Permutation& pi) {
    std::vector<Occurrence> out;
    scan_occurrences(sigma.letters(), pi.letters(), [&](const std::vector<int>& occ) {
        out.push_back(occ);
        return false;
    });
    return out;
}

bool occurrence_satisfies_mesh(const Permutation& sigma, const Occurrence& occ,
                               const MeshPattern& p) {
    const int n = static_cast<int>(sigma.size());
    if (occ.size() != p.base.size())
        throw InvalidOccurrence("occurrence length differs from the base pattern");
    std::vector<int> vals;
    for (std::size_t t = 0; t < occ.size(); ++t) {
        if (occ[t] < 1 || occ[t] > n || (t > 0 && occ[t] <= occ[t - 1]))
            throw InvalidOccurrence("occurrence positions must be increasing and in range");
        vals.push_back(sigma.at(static_cast<std::size_t>(occ[t])));
    }
    if (standardize(Word(vals)) != p.base)
        throw InvalidOccurrence("occurrence does not witness the base pattern");
    return mesh_regions_empty(sigma.letters(), occ, p.mesh);
}

bool contains_raw(const std::vector<int>& host, const PatternItem& item) {
    if (const auto* cl = std::get_if<Permutation>(&item))
        return contains_classical_raw(host, cl->letters());
    if (const auto* mp = std::get_if<MeshPattern>(&item))
        return contains_mesh_raw(host, mp->base.letters(), mp->mesh);
    return !avoids_barred_raw(host, std::get<BarredPattern>(item));
}

bool contains(const Permutation& sigma, const PatternItem& item) {
    return contains_raw(sigma.letters(), item);
}

bool contains_any_raw(const std::vector<int>& host, const PatternSet& items) {
    for (const PatternItem& it : items.items)
        if (contains_raw(host, it)) return true;
    return false;
}

bool contains_any(const Permutation& sigma, const PatternSet& items) {
    return contains_any_raw(sigma.letters(), items);
}

bool avoids_barred(const Permutation& sigma, const BarredPattern& b) {
    return avoids_barred_raw(sigma.letters(), b);
}

std::vector<EnclosedDiagonal> enclosed_diagonals(const MeshPattern& p) {
    const int k = static_cast<int>(p.base.size());
    std::set<std::pair<int, int>> plot;
    for (int x = 1; x <= k; ++x) plot.insert({x, p.base.at(static_cast<std::size_t>(x))});
    const auto in_plot = [&](int x, int y) { return plot.count({x, y}) > 0; };
    const auto shaded = [&](int i, int j) {
        return p.mesh.count({i, j}) > 0;
    };
    std::vector<EnclosedDiagonal> out;
    // Length 1: the closed box must contain no plot point, i.e. all four of
    // its corners are free. Direction is canonicalized to +1.
    for (const auto& [i, j] : p.mesh) {
        if (!in_plot(i, j) && !in_plot(i + 1, j) && !in_plot(i, j + 1) &&
            !in_plot(i + 1, j + 1))
            out.push_back({{i, j}, +1, 1});
    }
    // Longer runs: consecutive boxes share a lattice corner, and those shared
    // corners must be plot points while the two extreme corners are not.
    for (int len = 2; len <= k + 1; ++len) {
        for (int i = 0; i <= k; ++i) {
            for (int j = 0; j <= k; ++j) {
                bool ok = true;
                for (int d = 0; d < len && ok; ++d) ok = shaded(i + d, j + d);
                for (int d = 1; d < len && ok; ++d) ok = in_plot(i + d, j + d);
                if (ok && !in_plot(i, j) && !in_plot(i + len, j + len))
                    out.push_back({{i, j}, +1, len});
                ok = true;
                for (int d = 0; d < len && ok; ++d)
                    ok = j - d >= 0 && shaded(i + d, j - d);
                for (int d = 1; d < len && ok; ++d) ok = in_plot(i + d, j + 1 - d);
                if (ok && !in_plot(i, j + 1) && !in_plot(i + len, j + 1 - len))
                    out.push_back({{i, j}, -1, len});
            }
        }
    }
    return out;
}

bool is_superfluous(const MeshPattern& p) {
    if (p.mesh.empty()) return true;
    return enclosed_diagonals(p).empty();
}

namespace {

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    bool eat(char c) {
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    int read_int() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) throw ParseError("expected an integer", start);
        return std::stoi(text.substr(start, pos - start));
    }
};

// Permutation letters with optional apostrophe bars, in digit or comma form.
// Stops at '|', ';', or end of text.
void parse_letters(Scanner& sc, std::vector<int>& letters, std::set<int>& bars) {
    sc.skip_ws();
    const std::size_t item_start = sc.pos;
    bool comma_form = false;
    {
        std::size_t probe = sc.pos;
        while (probe < sc.text.size() && sc.text[probe] != ';' && sc.text[probe] != '|') {
            if (sc.text[probe] == ',') comma_form = true;
            ++probe;
        }
    }
    while (true) {
        sc.skip_ws();
        if (sc.done() || sc.peek() == ';' || sc.peek() == '|') break;
        if (comma_form) {
            letters.push_back(sc.read_int());
        } else {
            if (!std::isdigit(static_cast<unsigned char>(sc.peek())) || sc.peek() == '0')
                throw ParseError("expected digit 1-9 in pattern letters", sc.pos);
            letters.push_back(sc.peek() - '0');
            ++sc.pos;
        }
        sc.skip_ws();
        if (!sc.done() && sc.peek() == '\'') {
            bars.insert(static_cast<int>(letters.size()));
            ++sc.pos;
            sc.skip_ws();
        }
        if (comma_form) {
            if (!sc.done() && sc.peek() == ',') ++sc.pos;
        }
    }
    if (letters.empty()) throw ParseError("empty pattern item", item_start);
}

PatternItem parse_item(Scanner& sc) {
    std::vector<int> letters;
    std::set<int> bars;
    const std::size_t item_start = sc.pos;
    parse_letters(sc, letters, bars);
    Permutation base;
    try {
        base = Permutation(std::move(letters));
    } catch (const InvalidPermutation& e) {
        throw ParseError(e.what(), item_start);
    }
    sc.skip_ws();
    if (!sc.done() && sc.peek() == '|') {
        if (!bars.empty())
            throw ParseError("a pattern cannot be both barred and mesh", sc.pos);
        ++sc.pos;
        std::set<std::pair<int, int>> mesh;
        while (true) {
            sc.skip_ws();
            if (sc.done() || sc.peek() == ';') break;
            const std::size_t box_start = sc.pos;
            if (!sc.eat('(')) throw ParseError("expected '(' to open a mesh box", sc.pos);
            const int i = sc.read_int();
            sc.skip_ws();
            if (!sc.eat(',')) throw ParseError("expected ',' in mesh box", sc.pos);
            const int j = sc.read_int();
            sc.skip_ws();
            if (!sc.eat(')')) throw ParseError("expected ')' to close a mesh box", sc.pos);
            const int k = static_cast<int>(base.size());
            if (i < 0 || i > k || j < 0 || j > k)
                throw ParseError("mesh box outside [0,k]^2", box_start);
            mesh.insert({i, j});
        }
        return make_mesh(std::move(base), std::move(mesh));
    }
    if (!bars.empty()) return make_barred(std::move(base), std::move(bars));
    return base;
}

} // namespace

PatternSet parse_pattern_set(const std::string& text) {
    PatternSet out;
    Scanner sc{text};
    sc.skip_ws();
    if (sc.done()) return out;
    while (true) {
        out.items.push_back(parse_item(sc));
        sc.skip_ws();
        if (sc.done()) break;
        if (!sc.eat(';'))
            throw ParseError("expected ';' between pattern items", sc.pos);
        sc.skip_ws();
        if (sc.done()) throw ParseError("trailing ';' with no pattern item", sc.pos);
    }
    return out;
}

std::string format_pattern_item(const PatternItem& item) {
    if (const auto* cl = std::get_if<Permutation>(&item)) return format_permutation(*cl);
    if (const auto* mp = std::get_if<MeshPattern>(&item)) {
        std::string out = format_permutation(mp->base) + "|";
        for (const auto& [i, j] : mp->mesh)
            out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        return out;
    }
    const auto& bp = std::get<BarredPattern>(item);
    std::string out;
    const bool commas = bp.base.size() > 9;
    for (std::size_t t = 1; t <= bp.base.size(); ++t) {
        if (commas && t > 1) out.push_back(',');
        out += std::to_string(bp.base.at(t));
        if (bp.barred.count(static_cast<int>(t))) out.push_back('\'');
    }
    return out;
}

std::string format_pattern_set(const PatternSet& ps) {
    std::string out;
    for (std::size_t i = 0; i < ps.items.size(); ++i) {
        if (i) out += "; ";
        out += format_pattern_item(ps.items[i]);
    }
    return out;
}

} // namespace permstat
