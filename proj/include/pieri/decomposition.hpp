#pragma once

#include <map>
#include <vector>

#include "pieri/bigint.hpp"
#include "pieri/rootdata.hpp"

namespace pieri {

// Finite sum of irreducibles: dominant highest weight -> positive
// multiplicity. Keys are doubled coordinates; map order is ascending
// lexicographic, so reverse iteration gives the canonical display order.
class Decomposition {
public:
    explicit Decomposition(GroupType g) : group_(g) {}

    void add(const Weight& hw, const Int& mult);

    GroupType group() const { return group_; }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Int multiplicity(const Weight& hw) const;
    bool contains(const Weight& hw) const { return terms_.count(hw.doubled()) > 0; }

    // Sum of multiplicity * weyl_dim over all terms.
    Int total_dimension() const;

    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.group_ == b.group_ && a.terms_ == b.terms_;
    }

private:
    GroupType group_;
    std::map<std::vector<int>, Int> terms_;
};

} // namespace pieri
