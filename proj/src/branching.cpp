#include "pieri/branching.hpp"

#include <stdexcept>

#include "pieri/pieri_rules.hpp"

namespace pieri {

Decomposition branch_gl(const Partition& mu_plus, int n) {
    if (n < 1)
        throw std::invalid_argument("branch target rank must be positive");
    if (mu_plus.length() > n + 1)
        throw std::invalid_argument("rank mismatch: partition has more rows than the rank");
    Decomposition dec((GroupType(Family::A, n)));
    std::vector<int> lam(n, 0);
    auto rec = [&](auto&& self, int row) -> void {
        if (row == n) {
            dec.add(Weight::from_partition(Partition(std::vector<int>(lam)), n), 1);
            return;
        }
        for (int v = mu_plus.part(row + 1); v <= mu_plus.part(row); ++v) {
            lam[row] = v;
            self(self, row + 1);
        }
        lam[row] = 0;
    };
    rec(rec, 0);
    return dec;
}

BranchReport equivalence_check(int n, int size_bound) {
    BranchReport report;
    report.n = n;
    report.degree_bound = size_bound;
    auto mus = all_partitions(size_bound, n);
    for (const Partition& mu : mus) {
        Decomposition branched = branch_gl(mu, n);
        for (const Partition& lam : mus) {
            ++report.checked_pairs;
            bool in_branching = branched.contains(Weight::from_partition(lam, n));
            long long k = mu.size() - lam.size();
            bool in_pieri =
                k >= 0 && gl_symmetric(lam, static_cast<int>(k), n)
                              .contains(Weight::from_partition(mu, n));
            bool strip = is_strip(StripKind::Horizontal, lam, mu);
            if (in_branching != in_pieri || in_pieri != strip)
                report.mismatches.emplace_back(mu, lam);
        }
    }
    return report;
}

namespace {

Int binomial(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    Int result = 1;
    for (long long t = 1; t <= k; ++t) {
        result *= n - k + t;
        result /= t;
    }
    return result;
}

} // namespace

CauchyReport cauchy_dimension_check(int n, int m, int d) {
    if (n > m)
        throw std::invalid_argument("cauchy_dimension_check needs n <= m");
    if (n < 1 || d < 0)
        throw std::invalid_argument("bad dimensions");
    CauchyReport report;
    report.n = n;
    report.m = m;
    report.d = d;
    for (const Partition& lam : all_partitions(d, n)) {
        if (lam.size() != d)
            continue;
        report.paired_sum += weyl_dim(GroupType(Family::A, n), Weight::from_partition(lam, n)) *
                             weyl_dim(GroupType(Family::A, m), Weight::from_partition(lam, m));
    }
    report.polynomial_dim = binomial(static_cast<long long>(n) * m + d - 1, d);
    return report;
}

} // namespace pieri
