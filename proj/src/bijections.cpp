#include "permstat/bijections.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace permstat {

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) {
    std::size_t count = 0;
    for (auto& b : blocks) {
        if (b.empty()) throw InvalidPartition("blocks must be nonempty");
        std::sort(b.begin(), b.end());
        count += b.size();
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<char> seen(count + 1, 0);
    for (const auto& b : blocks)
        for (int v : b) {
            if (v < 1 || static_cast<std::size_t>(v) > count)
                throw InvalidPartition("blocks must cover exactly 1..n");
            if (seen[static_cast<std::size_t>(v)]++)
                throw InvalidPartition("blocks must be disjoint");
        }
    blocks_ = std::move(blocks);
    n_ = count;
}

SetPartition parse_set_partition(const std::string& text) {
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
    std::vector<std::vector<int>> blocks;
    expect('{');
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
        ++pos;
    } else {
        for (;;) {
            expect('{');
            std::vector<int> block;
            for (;;) {
                block.push_back(read_int());
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                break;
            }
            expect('}');
            blocks.push_back(std::move(block));
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect('}');
    }
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing characters", pos);
    try {
        return SetPartition(std::move(blocks));
    } catch (const InvalidPartition& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string format_set_partition(const SetPartition& sp) {
    std::string out = "{";
    for (std::size_t b = 0; b < sp.blocks().size(); ++b) {
        if (b) out += ",";
        out += "{";
        const auto& block = sp.blocks()[b];
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(block[i]);
        }
        out += "}";
    }
    out += "}";
    return out;
}

MotzkinPath::MotzkinPath(std::vector<Step> steps) {
    int height = 0;
    for (Step s : steps) {
        if (s == Step::Up) ++height;
        if (s == Step::Down) --height;
        if (height < 0)
            throw InvalidPath("a prefix has more down-steps than up-steps");
    }
    if (height != 0) throw InvalidPath("up-steps and down-steps must balance");
    steps_ = std::move(steps);
}

MotzkinPath parse_motzkin_path(const std::string& text) {
    std::vector<Step> steps;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'U': steps.push_back(Step::Up); break;
            case 'D': steps.push_back(Step::Down); break;
            case 'H': steps.push_back(Step::Horizontal); break;
            default:
                if (std::isspace(static_cast<unsigned char>(text[i]))) break;
                throw ParseError("expected one of U, D, H", i);
        }
    }
    return MotzkinPath(std::move(steps));
}

std::string format_motzkin_path(const MotzkinPath& p) {
    std::string out;
    for (Step s : p.steps())
        out.push_back(s == Step::Up ? 'U' : s == Step::Down ? 'D' : 'H');
    return out;
}

namespace {

const MeshPattern& partition_class_pattern() {
    static const MeshPattern p = make_mesh(Permutation({1, 3, 2}), {{2, 0}});
    return p;
}

const MeshPattern& motzkin_class_mesh() {
    static const MeshPattern p = make_mesh(Permutation({2, 3, 1}), {{1, 0}});
    return p;
}

} // namespace

SetPartition partition_from_avoider(const Permutation& sigma) {
    if (contains(sigma, partition_class_pattern()))
        throw NotInClass("permutation contains 132|(2,0)");
    std::vector<std::vector<int>> blocks;
    std::vector<int> run;
    for (std::size_t i = 1; i <= sigma.size(); ++i) {
        if (!run.empty() && run.back() > sigma.at(i)) {
            blocks.push_back(std::move(run));
            run.clear();
        }
        run.push_back(sigma.at(i));
    }
    if (!run.empty()) blocks.push_back(std::move(run));
    return SetPartition(std::move(blocks));
}

Permutation avoider_from_partition(const SetPartition& sp) {
    std::vector<int> letters;
    letters.reserve(sp.ground_size());
    const auto& blocks = sp.blocks();
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        letters.insert(letters.end(), it->begin(), it->end());
    return Permutation(std::move(letters));
}

MotzkinPath motzkin_from_avoider(const Permutation& sigma) {
    static const Permutation p321({3, 2, 1});
    if (contains(sigma, p321) || contains(sigma, motzkin_class_mesh()))
        throw NotInClass("permutation contains 321 or 231|(1,0)");
    const std::set<int> bottoms = descent_bottoms(sigma);
    const std::set<int> tops = descent_tops(sigma);
    std::vector<Step> steps;
    steps.reserve(sigma.size());
    for (int v = 1; v <= static_cast<int>(sigma.size()); ++v) {
        if (bottoms.count(v))
            steps.push_back(Step::Up);
        else if (tops.count(v))
            steps.push_back(Step::Down);
        else
            steps.push_back(Step::Horizontal);
    }
    return MotzkinPath(std::move(steps));
}

Permutation avoider_from_motzkin(const MotzkinPath& p) {
    const int n = static_cast<int>(p.size());
    std::vector<int> ups, downs;
    for (int v = 1; v <= n; ++v) {
        const Step s = p.steps()[static_cast<std::size_t>(v) - 1];
        if (s == Step::Up) ups.push_back(v);
        if (s == Step::Down) downs.push_back(v);
    }
    std::vector<char> is_down(static_cast<std::size_t>(n) + 1, 0);
    for (int v : downs) is_down[static_cast<std::size_t>(v)] = 1;
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(n));
    std::size_t next_up = 0;
    for (int v = 1; v <= n; ++v) {
        if (is_down[static_cast<std::size_t>(v)]) continue;
        if (next_up < ups.size() && v == ups[next_up]) {
            letters.push_back(downs[next_up]);
            ++next_up;
        }
        letters.push_back(v);
    }
    return Permutation(std::move(letters));
}

namespace {

// The three containment classes behind the descent-preserving maps. Full
// shading of grid columns 1 and 2 forces the first three letters of an
// occurrence to be adjacent, so membership reduces to a consecutive triple
// plus one later letter.
bool in_3124_class(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    for (int j = 0; j + 3 < n; ++j) {
        if (!(a[static_cast<std::size_t>(j) + 1] < a[static_cast<std::size_t>(j) + 2] &&
              a[static_cast<std::size_t>(j) + 2] < a[static_cast<std::size_t>(j)]))
            continue;
        for (int m = j + 3; m < n; ++m)
            if (a[static_cast<std::size_t>(m)] > a[static_cast<std::size_t>(j)]) return true;
    }
    return false;
}

bool in_2314_class(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    for (int j = 0; j + 3 < n; ++j) {
        if (!(a[static_cast<std::size_t>(j) + 2] < a[static_cast<std::size_t>(j)] &&
              a[static_cast<std::size_t>(j)] < a[static_cast<std::size_t>(j) + 1]))
            continue;
        for (int m = j + 3; m < n; ++m)
            if (a[static_cast<std::size_t>(m)] > a[static_cast<std::size_t>(j) + 1]) return true;
    }
    return false;
}

bool in_2413_class(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    for (int j = 0; j + 3 < n; ++j) {
        if (!(a[static_cast<std::size_t>(j) + 2] < a[static_cast<std::size_t>(j)] &&
              a[static_cast<std::size_t>(j)] < a[static_cast<std::size_t>(j) + 1]))
            continue;
        for (int m = j + 3; m < n; ++m)
            if (a[static_cast<std::size_t>(j)] < a[static_cast<std::size_t>(m)] &&
                a[static_cast<std::size_t>(m)] < a[static_cast<std::size_t>(j) + 1])
                return true;
    }
    return false;
}

using ClassPred = bool (*)(const std::vector<int>&);

constexpr int kMaxMapLength = 10;
constexpr int kMaxCachedLength = 8;

std::uint64_t encode(const std::vector<int>& a) {
    std::uint64_t code = 0;
    for (int v : a) code = (code << 4) | static_cast<std::uint64_t>(v - 1);
    return code;
}

std::vector<int> decode(std::uint64_t code, int n) {
    std::vector<int> a(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        a[static_cast<std::size_t>(i)] = static_cast<int>(code & 0xF) + 1;
        code >>= 4;
    }
    return a;
}

// Lex-ordered codes of {a : src(a), !tgt(a)} and {a : tgt(a), !src(a)},
// grouped by descent count.
struct CellTable {
    std::vector<std::vector<std::uint64_t>> src_only;
    std::vector<std::vector<std::uint64_t>> tgt_only;
};

const CellTable& cell_table(int n, ClassPred src, ClassPred tgt) {
    static std::map<std::tuple<int, ClassPred, ClassPred>, CellTable> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto [it, inserted] = cache.try_emplace({n, src, tgt});
    CellTable& table = it->second;
    if (inserted) {
        table.src_only.resize(static_cast<std::size_t>(n));
        table.tgt_only.resize(static_cast<std::size_t>(n));
        std::vector<int> a(static_cast<std::size_t>(n));
        std::iota(a.begin(), a.end(), 1);
        do {
            const bool s = src(a);
            const bool t = tgt(a);
            if (s == t) continue;
            const auto d = static_cast<std::size_t>(des_raw(a));
            (s ? table.src_only : table.tgt_only)[d].push_back(encode(a));
        } while (std::next_permutation(a.begin(), a.end()));
    }
    return table;
}

Permutation cell_image(const Permutation& sigma, ClassPred src, ClassPred tgt) {
    const int n = static_cast<int>(sigma.size());
    if (n > kMaxMapLength)
        throw DomainError("descent-cell maps are supported only for n <= 10");
    if (!src(sigma.letters())) throw NotInSourceClass("input is outside the source class");
    if (tgt(sigma.letters())) return sigma;
    const auto d = static_cast<std::size_t>(des_raw(sigma.letters()));
    if (n <= kMaxCachedLength) {
        const CellTable& table = cell_table(n, src, tgt);
        const auto& cell = table.src_only[d];
        const auto pos = std::lower_bound(cell.begin(), cell.end(), encode(sigma.letters()));
        const auto rank = static_cast<std::size_t>(pos - cell.begin());
        const auto& target = table.tgt_only[d];
        if (rank >= target.size())
            throw DomainError("descent cells are not equinumerous");
        return Permutation(decode(target[rank], n));
    }
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 1);
    std::size_t rank = 0;
    do {
        if (a == sigma.letters()) break;
        if (static_cast<std::size_t>(des_raw(a)) == d && src(a) && !tgt(a)) ++rank;
    } while (std::next_permutation(a.begin(), a.end()));
    std::iota(a.begin(), a.end(), 1);
    do {
        if (static_cast<std::size_t>(des_raw(a)) == d && tgt(a) && !src(a)) {
            if (rank == 0) return Permutation(a);
            --rank;
        }
    } while (std::next_permutation(a.begin(), a.end()));
    throw DomainError("descent cells are not equinumerous");
}

} // namespace

bool contains_3124_shaded(const Permutation& sigma) { return in_3124_class(sigma.letters()); }
bool contains_2314_shaded(const Permutation& sigma) { return in_2314_class(sigma.letters()); }
bool contains_2413_shaded(const Permutation& sigma) { return in_2413_class(sigma.letters()); }

Permutation alpha_31_to_23(const Permutation& sigma) {
    return cell_image(sigma, in_3124_class, in_2314_class);
}

Permutation beta_23_to_31(const Permutation& sigma) {
    return cell_image(sigma, in_2314_class, in_3124_class);
}

Permutation alpha_24_to_23(const Permutation& sigma) {
    return cell_image(sigma, in_2413_class, in_2314_class);
}

Permutation stack_sort(const Permutation& sigma) {
    std::vector<int> out, stack;
    out.reserve(sigma.size());
    for (int v : sigma.letters()) {
        while (!stack.empty() && stack.back() < v) {
            out.push_back(stack.back());
            stack.pop_back();
        }
        stack.push_back(v);
    }
    while (!stack.empty()) {
        out.push_back(stack.back());
        stack.pop_back();
    }
    return Permutation(std::move(out));
}

bool is_west_t_stack_sortable(const Permutation& sigma, int t) {
    if (t < 0) throw DomainError("sorting depth must be nonnegative");
    Permutation cur = sigma;
    for (int step = 0; step < t; ++step) {
        if (cur.is_identity()) return true;
        cur = stack_sort(cur);
    }
    return cur.is_identity();
}

} // namespace permstat
