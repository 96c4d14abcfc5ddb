#include "permstat/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace permstat {

long long max_stat_value(StatKind kind, int n) {
    if (n < 0) throw DomainError("length must be nonnegative");
    if (n <= 1) return 0;
    switch (kind) {
        case StatKind::des:
        case StatKind::exc:
            return n - 1;
        case StatKind::inv:
        case StatKind::maj:
            return static_cast<long long>(n) * (n - 1) / 2;
    }
    return 0;
}

namespace {

// Visit every permutation of [n] with first letter `first`, lexicographically,
// as a raw letter vector.
template <typename Fn>
void for_each_with_first(int n, int first, Fn&& fn) {
    std::vector<int> host(static_cast<std::size_t>(n));
    host[0] = first;
    int next = 1;
    for (int i = 1; i < n; ++i) {
        if (next == first) ++next;
        host[static_cast<std::size_t>(i)] = next++;
    }
    do {
        fn(host);
    } while (std::next_permutation(host.begin() + 1, host.end()));
}

// Run one worker per first letter, at most `jobs` at a time, and hand each
// block's result to `merge` in first-letter order.
template <typename Block, typename Work, typename Merge>
void run_blocks(int n, int jobs, Work&& work, Merge&& merge) {
    std::vector<Block> results(static_cast<std::size_t>(n));
    std::atomic<int> cursor{0};
    const int workers = std::max(1, std::min(jobs, n));
    auto loop = [&] {
        for (;;) {
            const int b = cursor.fetch_add(1);
            if (b >= n) break;
            results[static_cast<std::size_t>(b)] = work(b + 1);
        }
    };
    if (workers == 1) {
        loop();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(loop);
        for (auto& th : pool) th.join();
    }
    for (int b = 0; b < n; ++b) merge(results[static_cast<std::size_t>(b)]);
}

} // namespace

std::vector<Permutation> avoiders(const AvoidanceQuery& q, int jobs) {
    if (q.n < 0) throw DomainError("length must be nonnegative");
    if (q.stat_value &&
        (*q.stat_value < 0 || *q.stat_value > max_stat_value(q.stat, q.n)))
        throw DomainError("statistic filter outside the attainable range");
    std::vector<Permutation> out;
    if (q.n == 0) {
        if (!contains_any_raw({}, q.patterns) &&
            (!q.stat_value || *q.stat_value == 0))
            out.emplace_back();
        return out;
    }
    auto work = [&](int first) {
        std::vector<Permutation> block;
        for_each_with_first(q.n, first, [&](const std::vector<int>& host) {
            if (q.stat_value && stat_raw(q.stat, host) != *q.stat_value) return;
            if (!contains_any_raw(host, q.patterns)) block.emplace_back(Permutation(host));
        });
        return block;
    };
    run_blocks<std::vector<Permutation>>(q.n, jobs, work, [&](std::vector<Permutation>& block) {
        out.insert(out.end(), std::make_move_iterator(block.begin()),
                   std::make_move_iterator(block.end()));
    });
    return out;
}

QPolynomial stat_polynomial(int n, const PatternSet& patterns, StatKind kind,
                            int jobs) {
    if (n < 0) throw DomainError("length must be nonnegative");
    if (n == 0) {
        QPolynomial f;
        if (!contains_any_raw({}, patterns)) f.add_term(0, 1);
        return f;
    }
    const auto width = static_cast<std::size_t>(max_stat_value(kind, n)) + 1;
    using Counts = std::vector<long long>;
    auto work = [&](int first) {
        Counts counts(width, 0);
        for_each_with_first(n, first, [&](const std::vector<int>& host) {
            if (!contains_any_raw(host, patterns))
                ++counts[static_cast<std::size_t>(stat_raw(kind, host))];
        });
        return counts;
    };
    Counts total(width, 0);
    run_blocks<Counts>(n, jobs, work, [&](Counts& counts) {
        for (std::size_t k = 0; k < width; ++k) total[k] += counts[k];
    });
    QPolynomial f;
    for (std::size_t k = 0; k < width; ++k)
        if (total[k]) f.add_term(k, total[k]);
    return f;
}

} // namespace permstat
