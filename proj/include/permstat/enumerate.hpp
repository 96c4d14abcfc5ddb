#pragma once

#include <optional>
#include <vector>

#include "permstat/patterns.hpp"
#include "permstat/perm.hpp"
#include "permstat/qpoly.hpp"

namespace permstat {

struct AvoidanceQuery {
    int n = 0;
    PatternSet patterns;
    StatKind stat = StatKind::des;
    // When present, keep only avoiders whose statistic equals this value.
    std::optional<long long> stat_value;
};

// Largest value the statistic can take on a permutation of length n.
long long max_stat_value(StatKind kind, int n);

// All permutations of length q.n avoiding every pattern in q.patterns (and
// matching the statistic filter when set), in lexicographic order whatever
// the job count.
std::vector<Permutation> avoiders(const AvoidanceQuery& q, int jobs = 1);

// Generating polynomial of the statistic over the avoidance class:
// coefficient of q^k counts the avoiders with statistic k.
QPolynomial stat_polynomial(int n, const PatternSet& patterns, StatKind kind,
                            int jobs = 1);

} // namespace permstat
