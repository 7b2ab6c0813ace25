#pragma once

#include <utility>
#include <vector>

#include "pieri/decomposition.hpp"
#include "pieri/partition.hpp"
#include "pieri/tensor.hpp"

namespace pieri {

// Restriction of the i-th exterior power of the defining representation to
// the GL(n) Levi of the Siegel parabolic: a list of (j, k) with the
// summand meaning Lambda^j W (x) Lambda^k W*. j + k = i for C and D,
// j + k in {i, i-1} for B; both bounded by the rank.
struct LeviRestriction {
    std::vector<std::pair<int, int>> summands;
};

LeviRestriction levi_restrict_exterior(GroupType g, int i);

struct ConstituentCheck {
    Weight nu;
    Int mult;        // multiplicity inside the tensor product
    Int weight_mult; // multiplicity of nu - lambda as a weight of the second factor
    bool in_support = false;
    bool within_bound = false;
};

struct KostantBoundReport {
    GroupType g;
    Weight lambda, mu;
    bool holds = false; // support containment and multiplicity bound for every term
    std::vector<ConstituentCheck> constituents;
    // Dominant lambda + (weight of mu) that do NOT occur in the product:
    // witnesses that the naive converse fails.
    std::vector<Weight> converse_gaps;
};

// Checks that every constituent of the tensor product sits at
// lambda + (weight of the mu side) with multiplicity bounded by that
// weight's multiplicity.
KostantBoundReport kostant_bound_check(GroupType g, const Weight& lambda, const Weight& mu);

// Hom-space dimension on the Levi side: over the (j, k) summands, the
// number of overlays xi within the rank with xi/nu a k-box vertical strip
// and xi/lambda a j-box vertical strip.
Int extended_kostant_multiplicity(GroupType g, const Partition& lambda, const Partition& nu, int i);

struct MultiplicityMismatch {
    Partition nu;
    Int tensor_mult;
    Int hom_count;
};

struct HomEqualityReport {
    GroupType g;
    Partition lambda;
    int degree = 0;
    long long checked = 0;
    std::vector<MultiplicityMismatch> mismatches;
    // Tensor constituents whose highest weight is not a partition (possible
    // for family D only); they fall outside the Hom-side scan.
    long long nonpartition_terms = 0;
    bool ok() const { return mismatches.empty() && nonpartition_terms == 0; }
};

// Compares, for every candidate nu, the multiplicity of nu in
// lambda (x) Lambda^i against the Levi Hom count. Exact equality is the
// expected outcome for the symplectic family; B and D run in exploratory
// mode.
HomEqualityReport hom_equality_check(GroupType g, const Partition& lambda, int i);

struct ShiftViolation {
    Weight shifted_hw; // highest weight on the lambda + 1^n side
    Int shifted_mult;
    Int direct_mult;
};

struct ShiftInvarianceReport {
    int n = 0;
    Partition lambda;
    int degree = 0;
    std::vector<ShiftViolation> exterior_violations;
    std::vector<ShiftViolation> symmetric_violations;
    bool exterior_ok() const { return exterior_violations.empty(); }
};

// On Sp(2n): tensoring with an exterior power commutes with adding 1^n to
// every row; the symmetric-power analogue does not, and its violations are
// recorded as evidence.
ShiftInvarianceReport shift_invariance_check(int n, const Partition& lambda, int d);

} // namespace pieri
