#include "pieri/kostant.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pieri {

LeviRestriction levi_restrict_exterior(GroupType g, int i) {
    if (g.family == Family::A)
        throw std::invalid_argument("levi_restrict_exterior covers families B, C, D only");
    if (i < 0 || i > g.dim_defining())
        throw std::invalid_argument("exterior degree out of range");
    LeviRestriction lr;
    auto add_sum = [&](int total) {
        if (total < 0)
            return;
        for (int j = std::min(total, g.rank); j >= 0; --j) {
            int k = total - j;
            if (k > g.rank)
                continue;
            lr.summands.emplace_back(j, k);
        }
    };
    add_sum(i);
    if (g.family == Family::B)
        add_sum(i - 1);
    return lr;
}

KostantBoundReport kostant_bound_check(GroupType g, const Weight& lambda, const Weight& mu) {
    KostantBoundReport report{g, lambda, mu, true, {}, {}};
    Decomposition dec = tensor_irreps(g, lambda, mu);
    WeightDiagram wd = freudenthal(g, mu);
    for (const auto& [hw, m] : dec.terms()) {
        ConstituentCheck check;
        check.nu = Weight(hw);
        check.mult = m;
        check.weight_mult = wd.multiplicity(check.nu - lambda);
        check.in_support = check.weight_mult > 0;
        check.within_bound = m <= check.weight_mult;
        if (!check.in_support || !check.within_bound)
            report.holds = false;
        report.constituents.push_back(std::move(check));
    }
    for (const auto& [eta, m] : wd.entries()) {
        Weight sum = lambda + Weight(eta);
        if (is_dominant(g, sum) && !dec.contains(sum))
            report.converse_gaps.push_back(sum);
    }
    return report;
}

Int extended_kostant_multiplicity(GroupType g, const Partition& lambda, const Partition& nu, int i) {
    if (g.family == Family::A)
        throw std::invalid_argument("extended_kostant_multiplicity covers families B, C, D only");
    if (lambda.length() > g.rank || nu.length() > g.rank)
        throw std::invalid_argument("rank mismatch: partition has more rows than the rank");
    Int count = 0;
    for (const auto& [j, k] : levi_restrict_exterior(g, i).summands)
        for (const Partition& xi : strips_above(StripKind::Vertical, lambda, j, g.rank))
            if (xi.size() - nu.size() == k && is_strip(StripKind::Vertical, nu, xi))
                ++count;
    return count;
}

HomEqualityReport hom_equality_check(GroupType g, const Partition& lambda, int i) {
    if (g.family == Family::A)
        throw std::invalid_argument("hom_equality_check covers families B, C, D only");
    HomEqualityReport report;
    report.g = g;
    report.lambda = lambda;
    report.degree = i;

    Decomposition dec =
        klimyk_decompose(g, Weight::from_partition(lambda, g.rank), exterior_power(g, i));
    for (const auto& [hw, m] : dec.terms())
        if (hw.back() < 0)
            ++report.nonpartition_terms;

    // Every constituent sits at lambda + (weight of Lambda^i), so its size
    // is within i of |lambda|; the partition scan below is complete.
    long long max_size = lambda.size() + i;
    for (const Partition& nu : all_partitions(static_cast<int>(max_size), g.rank)) {
        Int tensor_mult = dec.multiplicity(Weight::from_partition(nu, g.rank));
        Int hom_count = extended_kostant_multiplicity(g, lambda, nu, i);
        ++report.checked;
        if (tensor_mult != hom_count)
            report.mismatches.push_back({nu, tensor_mult, hom_count});
    }
    return report;
}

namespace {

Partition add_one_per_row(const Partition& p, int n) {
    std::vector<int> parts(n);
    for (int r = 0; r < n; ++r)
        parts[r] = p.part(r) + 1;
    return Partition(std::move(parts));
}

void compare_shifted(GroupType g, const Decomposition& base, const Decomposition& shifted,
                     std::vector<ShiftViolation>& out) {
    // Keys of base moved up by 1^n must reproduce shifted exactly.
    std::map<std::vector<int>, Int> moved;
    for (const auto& [hw, m] : base.terms()) {
        std::vector<int> up = hw;
        for (int& x : up)
            x += 2;
        moved[up] = m;
    }
    std::set<std::vector<int>> keys;
    for (const auto& [hw, m] : moved)
        keys.insert(hw);
    for (const auto& [hw, m] : shifted.terms())
        keys.insert(hw);
    for (const auto& hw : keys) {
        auto a = moved.find(hw);
        Int lhs = a == moved.end() ? Int(0) : a->second;
        Int rhs = shifted.multiplicity(Weight(hw));
        if (lhs != rhs)
            out.push_back({Weight(hw), lhs, rhs});
    }
}

} // namespace

ShiftInvarianceReport shift_invariance_check(int n, const Partition& lambda, int d) {
    GroupType g(Family::C, n);
    if (lambda.length() > n)
        throw std::invalid_argument("rank mismatch: partition has more rows than the rank");
    ShiftInvarianceReport report;
    report.n = n;
    report.lambda = lambda;
    report.degree = d;

    Weight lam = Weight::from_partition(lambda, n);
    Weight lam_up = Weight::from_partition(add_one_per_row(lambda, n), n);

    compare_shifted(g, klimyk_decompose(g, lam, exterior_power(g, d)),
                    klimyk_decompose(g, lam_up, exterior_power(g, d)),
                    report.exterior_violations);
    compare_shifted(g, klimyk_decompose(g, lam, symmetric_power(g, d)),
                    klimyk_decompose(g, lam_up, symmetric_power(g, d)),
                    report.symmetric_violations);
    return report;
}

} // namespace pieri
