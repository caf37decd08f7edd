#include "stellar/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stellar/depressed.hpp"
#include "stellar/majorana.hpp"

namespace stellar {

namespace {

constexpr double kDepressedTol = 1e-9;

// Excitation-ordered view: entry k multiplies the k-excitation Dicke ket.
std::vector<Complex> excitation_coeffs(const SymmetricState& s) {
    return {s.coeffs.rbegin(), s.coeffs.rend()};
}

SymmetricState flipped(const SymmetricState& s) {
    return SymmetricState(s.n, excitation_coeffs(s));
}

bool is_depressed(const std::vector<Complex>& exc, int n) {
    return std::abs(exc[n - 1]) * std::sqrt(binomial(n, n - 1)) <= kDepressedTol;
}

Decomposition3 decompose3_exc(const std::vector<Complex>& exc) {
    Decomposition3 d;
    d.a_ghz = exc[0];
    d.a_w = exc[1] / std::sqrt(3.0);
    d.a_sep = exc[3] - exc[0];
    d.norm_check = std::norm(d.a_ghz) + 3.0 * std::norm(d.a_w) + std::norm(d.a_ghz + d.a_sep);
    return d;
}

Decomposition4 decompose4_exc(const std::vector<Complex>& exc) {
    Decomposition4 d;
    d.a_ghz = exc[0];
    d.a_w4 = exc[1] / 2.0;
    d.a_w2x2 = exc[2] / std::sqrt(6.0);
    d.a_sep = exc[4] - exc[0];
    d.norm_check = std::norm(d.a_ghz) + 4.0 * std::norm(d.a_w4) + 6.0 * std::norm(d.a_w2x2) +
                   std::norm(d.a_ghz + d.a_sep);
    return d;
}

double dent_from(const Decomposition3& d) {
    return 2.0 * (std::norm(d.a_ghz) + std::norm(d.a_w));
}

double dent_from(const Decomposition4& d) {
    return 2.0 * (std::norm(d.a_ghz) + std::norm(d.a_w4) + std::norm(d.a_w2x2));
}

}  // namespace

Decomposition3 decompose3(const SymmetricState& state) {
    if (state.n != 3) throw std::invalid_argument("decompose3 needs a 3-qubit state");
    auto exc = excitation_coeffs(state);
    if (!is_depressed(exc, 3)) throw std::domain_error("compress first");
    return decompose3_exc(exc);
}

Decomposition4 decompose4(const SymmetricState& state) {
    if (state.n != 4) throw std::invalid_argument("decompose4 needs a 4-qubit state");
    auto exc = excitation_coeffs(state);
    if (!is_depressed(exc, 4)) throw std::domain_error("compress first");
    return decompose4_exc(exc);
}

MeasureReport measure_state(const SymmetricState& state, double cluster_tol) {
    if (state.n != 3 && state.n != 4)
        throw std::invalid_argument("entanglement measure defined for 3 and 4 qubits");
    SymmetricState s = normalize(state);
    int n = s.n;

    MeasureReport rep;
    auto cons = find_roots(to_polynomial(s), cluster_tol);
    rep.separable = cons.stars.size() == 1;

    auto exc = excitation_coeffs(s);
    if (!is_depressed(exc, n)) {
        // depressing translation in the excitation frame = compression of the
        // qubit-flipped state (which also owns the pre-rotation fallback)
        CompressionResult comp = compress_state(flipped(s));
        exc = comp.state.coeffs;
        rep.compressed = true;
        rep.prerotated = comp.prerotated;
    }

    if (n == 3) {
        rep.d3 = decompose3_exc(exc);
        rep.dent_raw = dent_from(rep.d3);
    } else {
        rep.d4 = decompose4_exc(exc);
        rep.dent_raw = dent_from(rep.d4);
    }
    if (rep.separable) rep.dent_raw = 0.0;  // exactly zero by class
    rep.dent_clamped = std::clamp(rep.dent_raw, 0.0, 1.0);
    return rep;
}

double dent3(const SymmetricState& state, double cluster_tol) {
    if (state.n != 3) throw std::invalid_argument("dent3 needs a 3-qubit state");
    return measure_state(state, cluster_tol).dent_raw;
}

double dent4(const SymmetricState& state, double cluster_tol) {
    if (state.n != 4) throw std::invalid_argument("dent4 needs a 4-qubit state");
    return measure_state(state, cluster_tol).dent_raw;
}

}  // namespace stellar
