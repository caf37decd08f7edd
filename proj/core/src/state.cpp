#include "stellar/state.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stellar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int zeros_in(unsigned bits, int n) { return n - std::popcount(bits); }

}  // namespace

SymmetricState::SymmetricState(int n_, std::vector<Complex> coeffs_)
    : n(n_), coeffs(std::move(coeffs_)) {
    if (n < 1) throw std::invalid_argument("qubit count must be >= 1");
    if (coeffs.size() != static_cast<size_t>(n) + 1)
        throw std::invalid_argument("coefficient list must have n+1 entries");
}

Spinor Spinor::canonical(double alpha, double beta) {
    Spinor s;
    s.beta = beta;
    if (s.beta < 0.0) s.beta = 0.0;
    if (s.beta > std::numbers::pi) s.beta = std::numbers::pi;
    s.alpha = std::fmod(alpha, kTwoPi);
    if (s.alpha < 0.0) s.alpha += kTwoPi;
    if (s.beta == 0.0 || s.beta == std::numbers::pi) s.alpha = 0.0;
    return s;
}

Vec3 Spinor::unit_vector() const {
    return {std::sin(beta) * std::cos(alpha), std::sin(beta) * std::sin(alpha),
            std::cos(beta)};
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

double state_norm(const SymmetricState& state) {
    double s = 0.0;
    for (const auto& c : state.coeffs) s += std::norm(c);
    return std::sqrt(s);
}

SymmetricState normalize(const SymmetricState& state) {
    double nrm = state_norm(state);
    if (nrm < 1e-150) throw std::invalid_argument("zero state");
    SymmetricState out = state;
    for (auto& c : out.coeffs) c /= nrm;
    return out;
}

FullStateVector dicke_vector(int n, int l) {
    if (n < 1) throw std::invalid_argument("qubit count must be >= 1");
    if (l < 0 || l > n) throw std::out_of_range("Dicke index out of range");
    FullStateVector v;
    v.n = n;
    v.amps.assign(size_t{1} << n, Complex{});
    double amp = 1.0 / std::sqrt(binomial(n, l));
    for (unsigned b = 0; b < v.amps.size(); ++b)
        if (zeros_in(b, n) == l) v.amps[b] = amp;
    return v;
}

FullStateVector expand(const SymmetricState& state) {
    FullStateVector v;
    v.n = state.n;
    v.amps.assign(size_t{1} << state.n, Complex{});
    std::vector<double> amp(state.n + 1);
    for (int l = 0; l <= state.n; ++l) amp[l] = 1.0 / std::sqrt(binomial(state.n, l));
    for (unsigned b = 0; b < v.amps.size(); ++b) {
        int l = zeros_in(b, state.n);
        v.amps[b] = state.coeffs[l] * amp[l];
    }
    return v;
}

SymmetricState dicke_project(const FullStateVector& v) {
    std::vector<Complex> c(v.n + 1, Complex{});
    for (unsigned b = 0; b < v.amps.size(); ++b) c[zeros_in(b, v.n)] += v.amps[b];
    for (int l = 0; l <= v.n; ++l) c[l] /= std::sqrt(binomial(v.n, l));
    return SymmetricState(v.n, std::move(c));
}

SymmetricState symmetrize_spinors(const std::vector<Spinor>& spinors) {
    int n = static_cast<int>(spinors.size());
    if (n < 1) throw std::invalid_argument("need at least one spinor");
    if (n > 10) throw std::invalid_argument("permutation expansion too large");

    // Product over spinors of (v_i - u_i eps) with components
    // u = cos(b/2)e^{-ia/2}, v = sin(b/2)e^{ia/2}; the coefficients of the
    // product are the Majorana coefficients of the symmetrized state.
    std::vector<Complex> poly{Complex{1.0, 0.0}};
    for (const auto& s : spinors) {
        Complex u = std::cos(s.beta / 2) * std::exp(Complex{0, -s.alpha / 2});
        Complex v = std::sin(s.beta / 2) * std::exp(Complex{0, s.alpha / 2});
        std::vector<Complex> next(poly.size() + 1, Complex{});
        for (size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k] * v;
            next[k + 1] += poly[k] * (-u);
        }
        poly = std::move(next);
    }
    std::vector<Complex> c(n + 1);
    for (int l = 0; l <= n; ++l) {
        double sign = (l % 2 == 0) ? 1.0 : -1.0;
        c[l] = sign * poly[l] / std::sqrt(binomial(n, l));
    }
    return normalize(SymmetricState(n, std::move(c)));
}

double fidelity(const FullStateVector& a, const FullStateVector& b) {
    if (a.n != b.n) throw std::invalid_argument("qubit counts differ");
    Complex ip{};
    double na = 0.0, nb = 0.0;
    for (size_t i = 0; i < a.amps.size(); ++i) {
        ip += std::conj(a.amps[i]) * b.amps[i];
        na += std::norm(a.amps[i]);
        nb += std::norm(b.amps[i]);
    }
    if (na <= 0.0 || nb <= 0.0) throw std::invalid_argument("zero state");
    return std::norm(ip) / (na * nb);
}

double fidelity(const SymmetricState& a, const SymmetricState& b) {
    if (a.n != b.n) throw std::invalid_argument("qubit counts differ");
    Complex ip{};
    double na = 0.0, nb = 0.0;
    for (int l = 0; l <= a.n; ++l) {
        ip += std::conj(a.coeffs[l]) * b.coeffs[l];
        na += std::norm(a.coeffs[l]);
        nb += std::norm(b.coeffs[l]);
    }
    if (na <= 0.0 || nb <= 0.0) throw std::invalid_argument("zero state");
    return std::norm(ip) / (na * nb);
}

SymmetricState rotate_all_qubits(const SymmetricState& state, const Su2& u) {
    // The rotated state's polynomial is P'(e) = sum_l a_l (u.a e - u.c)^l (u.d - u.b e)^{n-l},
    // which places the roots at the Moebius images of the original roots and
    // tracks stars moving to or from infinity through the degree.
    int n = state.n;
    std::vector<Complex> a(n + 1);
    for (int l = 0; l <= n; ++l) {
        double sign = (l % 2 == 0) ? 1.0 : -1.0;
        a[l] = sign * std::sqrt(binomial(n, l)) * state.coeffs[l];
    }

    std::vector<Complex> acc(n + 1, Complex{});
    std::vector<Complex> lhs{Complex{1.0, 0.0}};  // (u.a e - u.c)^l, ascending
    for (int l = 0; l <= n; ++l) {
        std::vector<Complex> rhs{Complex{1.0, 0.0}};  // (u.d - u.b e)^{n-l}
        for (int j = 0; j < n - l; ++j) {
            std::vector<Complex> next(rhs.size() + 1, Complex{});
            for (size_t k = 0; k < rhs.size(); ++k) {
                next[k] += rhs[k] * u.d;
                next[k + 1] += rhs[k] * (-u.b);
            }
            rhs = std::move(next);
        }
        for (size_t i = 0; i < lhs.size(); ++i)
            for (size_t j = 0; j < rhs.size(); ++j) acc[i + j] += a[l] * lhs[i] * rhs[j];
        std::vector<Complex> next(lhs.size() + 1, Complex{});
        for (size_t k = 0; k < lhs.size(); ++k) {
            next[k] += lhs[k] * (-u.c);
            next[k + 1] += lhs[k] * u.a;
        }
        lhs = std::move(next);
    }

    // drop convolution dust below coefficient resolution
    double scale = 0.0;
    for (const auto& a_l : acc) scale = std::max(scale, std::abs(a_l));
    for (auto& a_l : acc)
        if (std::abs(a_l) < 1e-12 * scale) a_l = Complex{};

    std::vector<Complex> c(n + 1);
    for (int l = 0; l <= n; ++l) {
        double sign = (l % 2 == 0) ? 1.0 : -1.0;
        c[l] = sign * acc[l] / std::sqrt(binomial(n, l));
    }
    return normalize(SymmetricState(n, std::move(c)));
}

}  // namespace stellar
