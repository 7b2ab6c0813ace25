#include "pieri/decomposition.hpp"

#include <stdexcept>

namespace pieri {

void Decomposition::add(const Weight& hw, const Int& mult) {
    if (hw.rank() != group_.rank)
        throw std::invalid_argument("highest weight rank does not match the group");
    if (!is_dominant(group_, hw))
        throw std::invalid_argument("decomposition term is not dominant");
    if (mult == 0)
        return;
    if (mult < 0)
        throw std::invalid_argument("negative multiplicity in decomposition");
    terms_[hw.doubled()] += mult;
}

Int Decomposition::multiplicity(const Weight& hw) const {
    auto it = terms_.find(hw.doubled());
    return it == terms_.end() ? Int(0) : it->second;
}

Int Decomposition::total_dimension() const {
    Int total = 0;
    for (const auto& [hw, m] : terms_)
        total += m * weyl_dim(group_, Weight(hw));
    return total;
}

} // namespace pieri
