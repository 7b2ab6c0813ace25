#pragma once

#include "pieri/decomposition.hpp"
#include "pieri/partition.hpp"

namespace pieri {

// GL(n): tensor with the i-th exterior power of C^n. Multiplicity-free sum
// over vertical i-strips added to lambda within n rows.
Decomposition gl_exterior(const Partition& lambda, int i, int n);

// GL(n): tensor with the i-th symmetric power. Multiplicity-free sum over
// horizontal i-strips within n rows.
Decomposition gl_symmetric(const Partition& lambda, int i, int n);

// True iff lambda has strictly decreasing positive parts filling the rank:
// the hypothesis under which the closed-form rule below is exact.
bool classical_rule_applies(GroupType g, const Partition& lambda);

// Sp(2n)/SO(2n+1)/SO(2n): tensor with the i-th exterior power of the
// defining representation. m(mu) counts overlays xi obtained from lambda
// by adding a vertical strip and reduced to mu by removing one, with
// (|xi|-|lambda|) + (|xi|-|mu|) = i (also i-1 in the odd orthogonal case).
// Non-regular lambda is rejected unless force is set; the count is still
// produced then, but the rule's guarantee lapses.
Decomposition classical_exterior(GroupType g, const Partition& lambda, int i, bool force = false);

} // namespace pieri
