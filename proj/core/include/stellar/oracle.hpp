// Brute-force reference implementations used to validate the main pipeline.
// Everything here takes the slow explicit route on purpose: the permutation
// sum is literal (factorial cost), the refit multiplies root factors one by
// one.  Exposed in the library so the CLI selfcheck can run the same
// cross-validations as the test suite.
#pragma once

#include <array>

#include "stellar/majorana.hpp"
#include "stellar/state.hpp"

namespace stellar::oracle {

struct ReducedState {
    std::array<std::array<Complex, 2>, 2> rho{};  // single-qubit density matrix

    double trace() const { return (rho[0][0] + rho[1][1]).real(); }
    double purity() const;
    double min_eigenvalue() const;
};

// Normalized sum over all N! tensor-product permutations.  Throws for more
// than 8 spinors.
FullStateVector brute_symmetrize(const std::vector<Spinor>& spinors);

// Partial trace down to one qubit.
ReducedState reduce_one(const FullStateVector& v, int qubit);

// Expand prod (eps - root_i) over the finite roots (one list entry per root,
// multiplicity by repetition; exactly n entries), pad the degree for roots at
// infinity.  Inverse of find_roots up to scale.
MajoranaPolynomial refit_polynomial(const std::vector<ExtComplex>& roots, int n);

}  // namespace stellar::oracle
