// State <-> polynomial <-> constellation correspondence.
//
// A symmetric n-qubit state with Dicke coefficients c_l (l = number of zeros)
// maps to the polynomial
//
//     P(eps) = sum_l (-1)^l sqrt(C(n,l)) c_l eps^l,
//
// whose roots, counted with the stars at infinity supplied by any degree
// drop, are the n Majorana stars: eps = tan(beta/2) e^{i alpha} places the
// star at polar angle beta, azimuth alpha on the Bloch sphere.  A multiset of
// stars with multiplicities is a Constellation; the map is invertible up to
// global phase.
#pragma once

#include <vector>

#include "stellar/bloch.hpp"
#include "stellar/state.hpp"

namespace stellar {

struct MajoranaPolynomial {
    int n = 0;                    // intended degree = qubit count
    std::vector<Complex> coeffs;  // a_0..a_n, ascending powers

    // Effective degree: largest l with |a_l| above drop_tol relative to the
    // largest coefficient.  n minus this is the number of stars at infinity.
    int effective_degree(double drop_tol = 1e-12) const;
};

struct Star {
    ExtComplex root;
    int multiplicity = 1;
};

struct Constellation {
    int n = 0;
    std::vector<Star> stars;  // canonical order: finite roots by (re, im), infinity last

    std::vector<int> multiplicities() const;  // descending
};

// Dicke coefficients -> Majorana coefficients (exact reweighting, no roots).
MajoranaPolynomial to_polynomial(const SymmetricState& state);

// Inverse reweighting; does not normalize.
SymmetricState state_from_polynomial(const MajoranaPolynomial& poly);

// Find the constellation of a polynomial.  Roots come from the companion
// matrix of the degree-trimmed polynomial, are polished by Newton iterations,
// and are grouped into multiplicity clusters by single-linkage in the chordal
// metric at cluster_tol.  Clusters that jointly certify as one higher-order
// root (rebuilding the coefficients to machine accuracy) are merged even when
// eigenvalue scatter exceeds cluster_tol, so exact multiple roots are
// recovered.  Throws on the zero polynomial.
Constellation find_roots(const MajoranaPolynomial& poly, double cluster_tol = 1e-6);

// Inverse stereographic projection of one root.
Spinor root_to_spinor(const ExtComplex& root);

// Rebuild the state whose polynomial has exactly the given roots; inverse of
// the state -> constellation pipeline up to global phase.  Throws on an empty
// constellation.
SymmetricState from_constellation(const Constellation& constellation);

// Evaluate P and P' at a point (ascending coefficients).
Complex eval_poly(const std::vector<Complex>& coeffs, Complex z);
Complex eval_poly_derivative(const std::vector<Complex>& coeffs, Complex z);

// Coefficients of P(y + t) from those of P(y) (exact Taylor shift).
std::vector<Complex> taylor_shift(const std::vector<Complex>& coeffs, Complex t);

}  // namespace stellar
