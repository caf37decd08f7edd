#include "stellar/depressed.hpp"

#include <cmath>
#include <stdexcept>

namespace stellar {

namespace {

constexpr double kLeadTol = 1e-12;  // relative threshold for a vanishing leading coefficient

bool leading_vanishes(const MajoranaPolynomial& poly) {
    double scale = 0.0;
    for (const auto& a : poly.coeffs) scale = std::max(scale, std::abs(a));
    if (scale == 0.0) throw std::invalid_argument("zero polynomial");
    return std::abs(poly.coeffs[poly.n]) <= kLeadTol * scale;
}

std::vector<Complex> monic(const MajoranaPolynomial& poly) {
    if (leading_vanishes(poly)) throw std::domain_error("star at infinity: pre-rotate first");
    std::vector<Complex> m(poly.coeffs);
    Complex lead = m[poly.n];
    for (auto& c : m) c /= lead;
    return m;
}

}  // namespace

DepressedCubic depress_cubic(const MajoranaPolynomial& poly) {
    if (poly.n != 3) throw std::invalid_argument("depress_cubic needs a degree-3 polynomial");
    auto m = monic(poly);
    Complex t = -m[2] / 3.0;
    DepressedCubic d;
    d.shift = t;
    d.p = m[1] - m[2] * m[2] / 3.0;
    d.q = m[0] - m[1] * m[2] / 3.0 + 2.0 * m[2] * m[2] * m[2] / 27.0;
    return d;
}

DepressedQuartic depress_quartic(const MajoranaPolynomial& poly) {
    if (poly.n != 4) throw std::invalid_argument("depress_quartic needs a degree-4 polynomial");
    auto m = monic(poly);
    Complex t = -m[3] / 4.0;
    Complex m3_2 = m[3] * m[3];
    DepressedQuartic d;
    d.shift = t;
    d.p = m[2] - 3.0 * m3_2 / 8.0;
    d.q = m[1] - m[2] * m[3] / 2.0 + m3_2 * m[3] / 8.0;
    d.r = m[0] - m[1] * m[3] / 4.0 + m[2] * m3_2 / 16.0 - 3.0 * m3_2 * m3_2 / 256.0;
    return d;
}

CompressionResult compress_state(const SymmetricState& state) {
    if (state.n != 3 && state.n != 4)
        throw std::invalid_argument("compression defined for 3 and 4 qubits");

    CompressionResult out;
    SymmetricState working = state;
    MajoranaPolynomial poly = to_polynomial(working);
    if (leading_vanishes(poly)) {
        working = rotate_all_qubits(working, Su2::rotation_y(kPrerotationAngle));
        poly = to_polynomial(working);
        out.prerotated = true;
    }
    if (leading_vanishes(poly)) throw std::domain_error("star at infinity: pre-rotate first");

    int n = poly.n;
    // root centroid by Vieta; the shifted polynomial P(y + t) has roots eps_i - t
    Complex t = -(poly.coeffs[n - 1] / poly.coeffs[n]) / static_cast<double>(n);

    MajoranaPolynomial shifted;
    shifted.n = n;
    shifted.coeffs = taylor_shift(poly.coeffs, t);
    shifted.coeffs[n - 1] = Complex{};  // vanishes identically
    // drop shift dust below the module's coefficient resolution
    double scale = 0.0;
    for (const auto& c : shifted.coeffs) scale = std::max(scale, std::abs(c));
    for (auto& c : shifted.coeffs)
        if (std::abs(c) < kLeadTol * scale) c = Complex{};

    out.state = normalize(state_from_polynomial(shifted));
    out.shift = t;
    return out;
}

}  // namespace stellar
