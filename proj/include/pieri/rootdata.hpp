#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pieri/bigint.hpp"
#include "pieri/partition.hpp"

namespace pieri {

// The four classical families: A = GL(n), B = SO(2n+1), C = Sp(2n),
// D = SO(2n). rank is the rank n of the maximal torus.
enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

struct GroupType {
    Family family;
    int rank;

    GroupType(Family f, int r);

    // "A3", "B2", "C3", "D4"; "GLn" is accepted as an alias for An.
    static GroupType parse(const std::string& text);
    std::string str() const;

    // Dimension of the defining representation: n, 2n+1, 2n, 2n.
    int dim_defining() const;

    friend bool operator==(const GroupType& a, const GroupType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
};

// Weight of the maximal torus in the standard orthonormal basis, stored in
// DOUBLED coordinates (entry = 2 x true coordinate) so that the
// half-integral rho of SO(2n+1) stays integral. All coordinates of one
// weight share a parity; mixed parity is rejected at construction.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> doubled);
    static Weight from_true(const std::vector<int>& coords);
    static Weight from_partition(const Partition& p, int rank);

    const std::vector<int>& doubled() const { return c2_; }
    int rank() const { return static_cast<int>(c2_.size()); }
    bool integral() const; // all doubled entries even

    // Requires integral, nonnegative, weakly decreasing coordinates.
    Partition to_partition() const;

    // True coordinates: "2,1" or "3/2,1/2" or "3,2,-2".
    std::string str() const;

    Weight operator+(const Weight& other) const;
    Weight operator-(const Weight& other) const;

    friend bool operator==(const Weight& a, const Weight& b) { return a.c2_ == b.c2_; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c2_ < b.c2_; }

private:
    std::vector<int> c2_;
};

// Half-sum of the positive roots: A/D: (n-1,...,1,0); C: (n,...,2,1);
// B: (n-1/2,...,3/2,1/2).
Weight rho(GroupType g);

bool is_dominant(GroupType g, const Weight& w);

// Dominant and fixed by no reflection of the Weyl group.
bool is_regular_dominant(GroupType g, const Weight& w);

struct Straightened {
    int sign = 0; // -1, 0, +1; 0 means the weight lies on a wall
    std::optional<Weight> dominant;
};

// Moves w to the dominant chamber under the Weyl group, tracking the
// determinant of the unique group element used. Weights fixed by a
// reflection get sign 0 and no representative.
Straightened straighten(GroupType g, const Weight& w);

// Dominant representative of the orbit of w, sign-free (defined on walls).
Weight dominant_rep(GroupType g, const Weight& w);

// Weyl dimension formula, exact.
Int weyl_dim(GroupType g, const Weight& highest);

// Positive / simple roots in true coordinates (entries are integers for
// every classical family).
const std::vector<std::vector<int>>& positive_roots(GroupType g);
const std::vector<std::vector<int>>& simple_roots(GroupType g);

// Coefficients of v (true coordinates) on the simple-root basis, or
// nothing when v is not an integral combination.
std::optional<std::vector<long long>> simple_root_coords(GroupType g, const std::vector<int>& v_true);

// Full Weyl orbit of a weight, enumerated by closing under the simple
// reflections. Sorted, duplicate-free, in doubled coordinates.
std::vector<std::vector<int>> weyl_orbit(GroupType g, const std::vector<int>& doubled);

} // namespace pieri
