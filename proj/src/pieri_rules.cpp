#include "pieri/pieri_rules.hpp"

#include <stdexcept>

namespace pieri {

Decomposition gl_exterior(const Partition& lambda, int i, int n) {
    GroupType g(Family::A, n);
    if (i < 0 || i > n)
        throw std::invalid_argument("exterior degree out of range for GL(n)");
    if (lambda.length() > n)
        throw std::invalid_argument("rank mismatch: partition has more rows than the rank");
    Decomposition dec(g);
    for (const Partition& mu : strips_above(StripKind::Vertical, lambda, i, n))
        dec.add(Weight::from_partition(mu, n), 1);
    return dec;
}

Decomposition gl_symmetric(const Partition& lambda, int i, int n) {
    GroupType g(Family::A, n);
    if (i < 0)
        throw std::invalid_argument("symmetric degree out of range");
    if (lambda.length() > n)
        throw std::invalid_argument("rank mismatch: partition has more rows than the rank");
    Decomposition dec(g);
    for (const Partition& mu : strips_above(StripKind::Horizontal, lambda, i, n))
        dec.add(Weight::from_partition(mu, n), 1);
    return dec;
}

bool classical_rule_applies(GroupType g, const Partition& lambda) {
    if (lambda.length() != g.rank)
        return false;
    for (int r = 0; r + 1 < lambda.length(); ++r)
        if (lambda.part(r) <= lambda.part(r + 1))
            return false;
    return lambda.part(lambda.length() - 1) > 0;
}

Decomposition classical_exterior(GroupType g, const Partition& lambda, int i, bool force) {
    if (g.family == Family::A)
        throw std::invalid_argument("classical_exterior covers families B, C, D only");
    if (lambda.length() > g.rank)
        throw std::invalid_argument("rank mismatch: partition has more rows than the rank");
    if (i < 0 || i > g.dim_defining())
        throw std::invalid_argument("exterior degree out of range");
    if (!classical_rule_applies(g, lambda) && !force)
        throw std::invalid_argument(
            "highest weight is not regular; the rule is only guaranteed there (use force to compute anyway)");

    Decomposition dec(g);
    auto count_overlays = [&](int strip_total) {
        if (strip_total < 0)
            return;
        for (int j = 0; j <= strip_total; ++j) {
            int k = strip_total - j;
            for (const Partition& xi : strips_above(StripKind::Vertical, lambda, j, g.rank))
                for (const Partition& mu : strips_below(StripKind::Vertical, xi, k))
                    dec.add(Weight::from_partition(mu, g.rank), 1);
        }
    };
    count_overlays(i);
    if (g.family == Family::B)
        count_overlays(i - 1);
    return dec;
}

} // namespace pieri
