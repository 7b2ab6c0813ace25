#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pieri/decomposition.hpp"
#include "pieri/weightdiagram.hpp"

namespace pieri {

// Raised when sign accumulation over a supposed character ends on a
// negative total: the input diagram was not a genuine character.
struct invalid_character_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Klimyk straightening: for every weight eta of u, straighten
// lambda + rho + eta and accumulate sign * multiplicity at the dominant
// representative minus rho. Exact for any genuine character u.
Decomposition klimyk_decompose(GroupType g, const Weight& lambda, const WeightDiagram& u);

// Tensor product of two irreducibles; the factor of smaller dimension is
// expanded into its weight diagram (ties expand the second factor).
Decomposition tensor_irreps(GroupType g, const Weight& lambda, const Weight& mu);

struct DeepPieriResult {
    bool hypothesis_holds = false;
    std::optional<Decomposition> dec;
};

// Translation-style rule: when lambda + rho + eta is dominant for every
// weight eta of u, the tensor product is read off the diagram of u
// directly, keeping only the dominant sums lambda + eta.
DeepPieriResult deep_pieri(GroupType g, const Weight& lambda, const WeightDiagram& u);

// True iff u is minuscule: a single Weyl orbit of multiplicity-one weights
// whose pairings with every simple coroot lie in {-1,0,1}. Minuscule u
// makes the deep_pieri hypothesis automatic; this is cross-checked against
// deep_pieri at the given lambda when lambda is dominant.
bool minuscule_hypothesis(GroupType g, const WeightDiagram& u, const Weight& lambda);

struct NecessityRecord {
    Weight lambda;
    std::size_t rep_index = 0; // position in the scanned rep list
};

// Scans dominant lambda (entries bounded by max_entry) against each rep:
// records every case where the deep_pieri hypothesis fails yet the Klimyk
// decomposition still equals the dominant-sums weight map. An empty result
// is evidence that the hypothesis is necessary.
std::vector<NecessityRecord> necessity_scan(GroupType g, int max_entry,
                                            const std::vector<WeightDiagram>& reps);

// All dominant integral weights with entries in [0, max_entry] (family D
// also the variants with negated last coordinate). Building block of the
// scan verbs.
std::vector<Weight> dominant_weights_up_to(GroupType g, int max_entry);

} // namespace pieri
