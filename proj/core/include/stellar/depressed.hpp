// Tschirnhaus shift of cubic and quartic Majorana polynomials and the
// corresponding state-level compression that removes one Dicke term.
#pragma once

#include "stellar/majorana.hpp"
#include "stellar/state.hpp"

namespace stellar {

// Deterministic fallback rotation applied when the leading coefficient
// vanishes (a star sits at infinity): angle about the y axis.
inline constexpr double kPrerotationAngle = 0.7;

struct DepressedCubic {
    Complex p, q;
    Complex shift;  // root translation t with eps = y + t
};

struct DepressedQuartic {
    Complex p, q, r;
    Complex shift;
};

// Shift eliminating the quadratic term: roots y_i = eps_i - t with
// t = -(a_2/a_3)/3; the y_i are the roots of y^3 + p y + q.
// Throws std::domain_error("star at infinity: pre-rotate first") when the
// leading coefficient is (relatively) zero.
DepressedCubic depress_cubic(const MajoranaPolynomial& poly);

// Same for degree four: t = -(a_3/a_4)/4, depressed form y^4 + p y^2 + q y + r.
DepressedQuartic depress_quartic(const MajoranaPolynomial& poly);

struct CompressionResult {
    SymmetricState state;  // renormalized; its Majorana roots sum to zero
    Complex shift;         // translation applied to every root
    bool prerotated = false;
};

// Translate every constellation root by -shift so the root centroid moves to
// the origin, and rebuild the state.  The rebuilt state's eps^{n-1} Dicke
// coefficient vanishes; the multiplicity partition is preserved exactly.
// When the leading coefficient vanishes the state is first rotated once by
// kPrerotationAngle about y; if it is still degenerate the depress error
// propagates.  Only n = 3 and 4 are supported.
CompressionResult compress_state(const SymmetricState& state);

}  // namespace stellar
