#include "stellar/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace stellar::oracle {

double ReducedState::purity() const {
    double s = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) s += (rho[a][b] * rho[b][a]).real();
    return s;
}

double ReducedState::min_eigenvalue() const {
    double tr = trace();
    Complex det = rho[0][0] * rho[1][1] - rho[0][1] * rho[1][0];
    double disc = std::max(0.0, tr * tr - 4.0 * det.real());
    return (tr - std::sqrt(disc)) / 2.0;
}

FullStateVector brute_symmetrize(const std::vector<Spinor>& spinors) {
    int n = static_cast<int>(spinors.size());
    if (n < 1) throw std::invalid_argument("need at least one spinor");
    if (n > 8) throw std::invalid_argument("permutation expansion too large");

    std::vector<std::array<Complex, 2>> comp(n);
    for (int i = 0; i < n; ++i) {
        const Spinor& s = spinors[i];
        comp[i] = {std::cos(s.beta / 2) * std::exp(Complex{0, -s.alpha / 2}),
                   std::sin(s.beta / 2) * std::exp(Complex{0, s.alpha / 2})};
    }

    FullStateVector v;
    v.n = n;
    v.amps.assign(size_t{1} << n, Complex{});
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned b = 0; b < v.amps.size(); ++b) {
            Complex amp{1.0, 0.0};
            for (int pos = 0; pos < n; ++pos) {
                int bit = (b >> (n - 1 - pos)) & 1;
                amp *= comp[perm[pos]][bit];
            }
            v.amps[b] += amp;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    double nrm = 0.0;
    for (const auto& a : v.amps) nrm += std::norm(a);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-150) throw std::invalid_argument("zero state");
    for (auto& a : v.amps) a /= nrm;
    return v;
}

ReducedState reduce_one(const FullStateVector& v, int qubit) {
    if (qubit < 0 || qubit >= v.n) throw std::out_of_range("qubit index out of range");
    int bit = v.n - 1 - qubit;  // qubit 0 is the most significant bit
    ReducedState r;
    for (unsigned b = 0; b < v.amps.size(); ++b) {
        if ((b >> bit) & 1) continue;
        unsigned b1 = b | (1u << bit);
        r.rho[0][0] += v.amps[b] * std::conj(v.amps[b]);
        r.rho[0][1] += v.amps[b] * std::conj(v.amps[b1]);
        r.rho[1][0] += v.amps[b1] * std::conj(v.amps[b]);
        r.rho[1][1] += v.amps[b1] * std::conj(v.amps[b1]);
    }
    return r;
}

MajoranaPolynomial refit_polynomial(const std::vector<ExtComplex>& roots, int n) {
    if (static_cast<int>(roots.size()) != n)
        throw std::invalid_argument("root count must equal n");
    std::vector<Complex> poly{Complex{1.0, 0.0}};
    for (const auto& r : roots) {
        if (r.at_infinity) continue;
        std::vector<Complex> next(poly.size() + 1, Complex{});
        for (size_t j = 0; j < poly.size(); ++j) {
            next[j] += poly[j] * (-r.value);
            next[j + 1] += poly[j];
        }
        poly = std::move(next);
    }
    poly.resize(n + 1, Complex{});
    MajoranaPolynomial p;
    p.n = n;
    p.coeffs = std::move(poly);
    return p;
}

}  // namespace stellar::oracle
