#pragma once

#include <map>
#include <vector>

#include "pieri/bigint.hpp"
#include "pieri/decomposition.hpp"
#include "pieri/rootdata.hpp"

namespace pieri {

// Character of a finite-dimensional torus module: weight -> positive
// multiplicity. All stored weights share rank and parity.
class WeightDiagram {
public:
    explicit WeightDiagram(GroupType g) : group_(g) {}

    void add(const Weight& w, const Int& mult);

    GroupType group() const { return group_; }
    const std::map<std::vector<int>, Int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    Int multiplicity(const Weight& w) const;
    Int mass() const; // total multiplicity = dimension of the module

    friend bool operator==(const WeightDiagram& a, const WeightDiagram& b) {
        return a.group_ == b.group_ && a.entries_ == b.entries_;
    }

private:
    GroupType group_;
    std::map<std::vector<int>, Int> entries_;
};

// Weights of the defining representation: A: e_1..e_n; C/D: +-e_i;
// B: +-e_i and 0.
WeightDiagram defining_weights(GroupType g);

// i-th exterior power of the defining representation: sums of i distinct
// basis weight vectors. Throws when i is out of [0, dim].
WeightDiagram exterior_power(GroupType g, int i);

// i-th symmetric power: sums of i basis weight vectors with repetition.
WeightDiagram symmetric_power(GroupType g, int i);

// Full weight diagram of the irreducible with the given highest weight,
// by the Freudenthal multiplicity recursion. Integral weights only
// (family B also admits the odd-parity spin weights).
WeightDiagram freudenthal(GroupType g, const Weight& highest);

// Pointwise product of characters: entries (w1+w2, m1*m2) accumulated.
WeightDiagram convolve(const WeightDiagram& a, const WeightDiagram& b);

// Character of a decomposition: sum of mult * freudenthal(term).
WeightDiagram diagram_of_decomposition(const Decomposition& dec);

} // namespace pieri
