#pragma once

#include <utility>
#include <vector>

#include "pieri/decomposition.hpp"
#include "pieri/partition.hpp"

namespace pieri {

// Restriction of the GL(n+1) irreducible with highest weight mu_plus to
// GL(n): the multiplicity-free set of lambda interleaving mu_plus,
//   mu_plus_1 >= lambda_1 >= mu_plus_2 >= ... >= lambda_n >= mu_plus_{n+1}.
Decomposition branch_gl(const Partition& mu_plus, int n);

struct BranchReport {
    int n = 0;
    int degree_bound = 0;
    long long checked_pairs = 0;
    std::vector<std::pair<Partition, Partition>> mismatches; // (mu, lambda)
    bool ok() const { return mismatches.empty(); }
};

// For every pair (mu, lambda) within the bound, the following must agree:
// lambda appears in the branching of mu from GL(n+1); mu appears in some
// lambda (x) Sym^k; mu/lambda is a horizontal strip.
BranchReport equivalence_check(int n, int size_bound);

struct CauchyReport {
    int n = 0, m = 0, d = 0;
    Int paired_sum = 0; // sum of dim_GL(n) x dim_GL(m) over partitions of d
    Int polynomial_dim = 0; // binomial(nm + d - 1, d)
    bool ok() const { return paired_sum == polynomial_dim; }
};

// Degree-d slice of the GL(n) x GL(m) decomposition of polynomials on
// n x m matrices, checked by dimension count.
CauchyReport cauchy_dimension_check(int n, int m, int d);

} // namespace pieri
