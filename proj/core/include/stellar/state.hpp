// Symmetric multi-qubit states in the Dicke basis.
//
// A SymmetricState holds the n+1 coefficients c_0..c_n, where c_l multiplies
// the normalized Dicke ket with exactly l zeros (and n-l ones) among the
// qubits.  Under this indexing l = n is |00...0> and l = 0 is |11...1>.
// All operations are pure functions; values are safe to share across threads.
#pragma once

#include <complex>
#include <vector>

#include "stellar/bloch.hpp"

namespace stellar {

struct SymmetricState {
    int n = 0;  // qubit count, >= 1
    std::vector<Complex> coeffs;  // c_0..c_n, Dicke amplitudes (l = number of zeros)

    SymmetricState() = default;
    SymmetricState(int n_, std::vector<Complex> coeffs_);
};

struct FullStateVector {
    int n = 0;
    std::vector<Complex> amps;  // 2^n amplitudes; bit i of the index is qubit i (MSB first)
};

// Bloch-sphere direction of a single qubit: |e> = cos(b/2)e^{-ia/2}|0> + sin(b/2)e^{ia/2}|1>.
struct Spinor {
    double alpha = 0;  // azimuthal angle, canonicalized to [0, 2pi)
    double beta = 0;   // polar angle in [0, pi]

    static Spinor canonical(double alpha, double beta);
    Vec3 unit_vector() const;
};

// exact binomial coefficient as a double (n small)
double binomial(int n, int k);

// Rescale so that sum |c_l|^2 = 1.  Throws std::invalid_argument("zero state")
// when every coefficient is (numerically) zero.
SymmetricState normalize(const SymmetricState& state);

double state_norm(const SymmetricState& state);

// The Dicke ket with l zeros as a full 2^n vector: amplitude
// sqrt(l!(n-l)!/n!) on every bitstring with exactly l zero bits.
FullStateVector dicke_vector(int n, int l);

// Expand Dicke coefficients into the full 2^n amplitude vector.
FullStateVector expand(const SymmetricState& state);

// Project a symmetric full vector back onto the Dicke coefficients.
SymmetricState dicke_project(const FullStateVector& v);

// Normalized symmetrization of a spinor product state, computed through the
// Dicke projection (polynomial product over spinor components, no factorial
// sum).  Equals the explicit permutation sum up to global phase.
// Throws for more than 10 spinors.
SymmetricState symmetrize_spinors(const std::vector<Spinor>& spinors);

// |<a|b>|^2, robust to unnormalized inputs.  Throws on mismatched qubit count.
double fidelity(const FullStateVector& a, const FullStateVector& b);

double fidelity(const SymmetricState& a, const SymmetricState& b);

// Apply a single-qubit rotation to every qubit (the symmetric subspace is
// preserved).  Implemented as an exact coefficient transform.
SymmetricState rotate_all_qubits(const SymmetricState& state, const Su2& u);

}  // namespace stellar
