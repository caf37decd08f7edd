// Decomposition of compressed 3- and 4-qubit states onto GHZ / W-type /
// separable components and the decomposition-based entanglement value D_ent.
//
// The decomposition lives in the excitation-ordered view of the Dicke
// coefficients (entry k = amplitude of the k-excitation ket, i.e. the
// coefficient list reversed).  A state is "depressed" here when its
// (n-1)-excitation coefficient vanishes; the component kets are then
//
//   n=3:  a_ghz (|000>+|111>)  +  a_w (|001>+|010>+|100>)  +  a_sep |111>
//   n=4:  a_ghz (|0000>+|1111>) + a_w4 (one-excitation sum, 4 terms)
//         + a_w2x2 (two-excitation sum, 6 terms) + a_sep |1111>
//
// with the kets unnormalized, and recombination reproduces the state exactly.
// D_ent = 2 (|a_ghz|^2 + |a_w|^2 [+ |a_w2x2|^2]); anchors: the GHZ states
// give 1, the one-excitation Dicke states 2/3 (n=3) and 1/2 (n=4), the
// two-excitation 4-qubit Dicke state 1/3, every separable state 0.
#pragma once

#include "stellar/state.hpp"

namespace stellar {

struct Decomposition3 {
    Complex a_ghz, a_w, a_sep;
    double norm_check = 0;  // squared norm of the recombined vector
};

struct Decomposition4 {
    Complex a_ghz, a_w4, a_w2x2, a_sep;
    double norm_check = 0;
};

// Exact linear rewriting of a depressed state's coefficients onto the
// component kets.  Throws std::domain_error("compress first") when the
// (n-1)-excitation coefficient is not (numerically) zero.
Decomposition3 decompose3(const SymmetricState& state);
Decomposition4 decompose4(const SymmetricState& state);

struct MeasureReport {
    double dent_raw = 0;
    double dent_clamped = 0;  // clipped to [0,1] for display only
    bool separable = false;   // partition [n]: D_ent fixed to 0 by class
    bool compressed = false;  // the depressing translation was applied internally
    bool prerotated = false;  // deterministic fallback rotation was needed
    Decomposition3 d3;        // filled for n = 3
    Decomposition4 d4;        // filled for n = 4
};

// D_ent with compression applied internally when needed.  Separable states
// (multiplicity partition [n]) report exactly 0.  States whose reversed-frame
// leading coefficient vanishes while compression is required go through one
// deterministic pre-rotation; if that fails too, std::domain_error
// propagates.
MeasureReport measure_state(const SymmetricState& state, double cluster_tol = 1e-6);

double dent3(const SymmetricState& state, double cluster_tol = 1e-6);
double dent4(const SymmetricState& state, double cluster_tol = 1e-6);

}  // namespace stellar
