// Entanglement class labels from the constellation's multiplicity partition,
// cross-checked against depressed-form coefficient conditions, plus geometric
// detection of the constellation's cyclic rotation symmetry.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stellar/depressed.hpp"
#include "stellar/majorana.hpp"

namespace stellar {

using MultiplicityPartition = std::vector<int>;  // descending, sums to n

struct SymmetryReport {
    bool continuous = false;  // all stars on one axis: full rotational symmetry
    int cyclic_order = 1;     // largest k with a 2pi/k rotation preserving the stars
    std::optional<Vec3> axis; // absent when the order is 1

    std::string group_label() const;  // "e", "C2", ..., "Cinf"
};

enum class EntanglementClass {
    Separable,  // n=3, [3]
    W,          // n=3, [2,1]
    GHZ,        // n=3, [1,1,1] with depressed p = 0
    Generic3,
    Separable4,  // n=4, [4]
    W4,          // [3,1]
    W2x2,        // [2,2]
    TwoOneOne,   // [2,1,1]
    GHZ4,        // [1,1,1,1] with depressed p = q = 0
    Generic4,
};

std::string to_string(EntanglementClass c);

struct ClassReport {
    EntanglementClass label;
    MultiplicityPartition partition;
    SymmetryReport symmetry;
    std::string group_label;  // per-class lookup: e / C2 / C3 / C4, geometric fallback
    Complex p, q, r;          // depressed coefficients (r is zero for n = 3)
    bool max_ghz = false;     // |q| (cubic) or |r| (quartic) within tol of 1
    bool prerotated = false;  // leading coefficient vanished; coefficients from the rotated state
};

MultiplicityPartition partition(const Constellation& constellation);

// Largest k <= n (or the continuous flag) such that some sphere rotation by
// 2pi/k maps the star multiset, multiplicities included, to itself within
// tol.  Candidate axes: star directions, pairwise bisectors, pairwise plane
// normals, and the star centroid; every reported rotation is verified by
// explicit matching.  Ties prefer the axis with lexicographically largest
// (z, y, x).
SymmetryReport detect_cyclic_symmetry(const Constellation& constellation, double tol = 1e-6);

// Full classification.  Throws std::invalid_argument for n outside {3,4} and
// std::logic_error when the partition-based label and the depressed-form
// conditions disagree (internal consistency failure).
ClassReport classify_state(const SymmetricState& state, double tol = 1e-6,
                           double cluster_tol = 1e-6);

}  // namespace stellar
