#include "stellar/majorana.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace stellar {

namespace {

constexpr double kDropTol = 1e-12;    // relative: leading coefficient treated as zero
constexpr double kMergeWindow = 5e-3; // chordal search window for multiplicity upgrades

// Local-factor residual certifying a merge.  Coefficient noise enters the
// monic root set at machine epsilon times max|a|/|a_lead|, so the gate
// carries a capped conditioning allowance on top of the well-scaled floor.
double merge_gate(const std::vector<Complex>& trimmed) {
    double scale = 0.0;
    for (const auto& c : trimmed) scale = std::max(scale, std::abs(c));
    double cond = scale / std::abs(trimmed.back());
    return std::max(3e-12, std::min(1e-9, 50.0 * 2.22e-16 * cond));
}

struct Cluster {
    std::vector<Complex> members;  // finite roots only
    int multiplicity = 0;
    bool infinite = false;
    ExtComplex rep;
};

std::vector<Complex> derivative_coeffs(const std::vector<Complex>& a) {
    std::vector<Complex> d(std::max<size_t>(1, a.size() - 1), Complex{});
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<double>(i);
    return d;
}

// Newton iteration that only accepts steps decreasing |P|; near multiple
// roots evaluation noise would otherwise throw the iterate far away.
Complex polish_simple(const std::vector<Complex>& a, Complex z, int iters = 6) {
    double best = std::abs(eval_poly(a, z));
    for (int i = 0; i < iters; ++i) {
        Complex dp = eval_poly_derivative(a, z);
        if (std::abs(dp) < 1e-300) break;
        Complex zn = z - eval_poly(a, z) / dp;
        double v = std::abs(eval_poly(a, zn));
        if (v >= best) break;
        best = v;
        z = zn;
    }
    return z;
}

// An m-fold root of P is a simple root of P^{(m-1)}, where Newton reaches
// machine accuracy; direct evaluation of P can locate it only to eps^(1/m).
Complex refine_multiple(const std::vector<Complex>& a, Complex z, int m) {
    std::vector<Complex> d = a;
    for (int k = 1; k < m; ++k) d = derivative_coeffs(d);
    return polish_simple(d, z, 8);
}

// Coefficients of a_lead * (x - z)^m * prod_i (x - r_i)^{m_i}, ascending.
std::vector<Complex> rebuild_coeffs(Complex lead, const std::vector<std::pair<Complex, int>>& roots) {
    std::vector<Complex> poly{lead};
    for (const auto& [r, m] : roots)
        for (int k = 0; k < m; ++k) {
            std::vector<Complex> next(poly.size() + 1, Complex{});
            for (size_t j = 0; j < poly.size(); ++j) {
                next[j] += poly[j] * (-r);
                next[j + 1] += poly[j];
            }
            poly = std::move(next);
        }
    return poly;
}

// How far the monic product over the member roots is from a perfect m-fold
// root at z, with each coefficient measured against its natural scale
// C(m,j) max(1,|z|)^{m-j}.  Genuine multiple roots land at solver-noise level
// (the eigenvalue scatter multiplies back out, by Vieta); a deliberately
// split pair at planar distance d scores about (d/2)^2 / max(1,|z|)^2.
double local_merge_residual(const std::vector<Complex>& members, Complex z) {
    std::vector<Complex> local{Complex{1.0, 0.0}};
    for (const auto& r : members) {
        std::vector<Complex> next(local.size() + 1, Complex{});
        for (size_t j = 0; j < local.size(); ++j) {
            next[j] += local[j] * (-r);
            next[j + 1] += local[j];
        }
        local = std::move(next);
    }
    int m = static_cast<int>(members.size());
    // coefficients of (x - z)^m
    double base = std::max(1.0, std::abs(z));
    double worst = 0.0;
    Complex zpow{1.0, 0.0};
    for (int j = m; j >= 0; --j) {
        double sign = ((m - j) % 2 == 0) ? 1.0 : -1.0;
        Complex expected = sign * binomial(m, j) * zpow;
        double scale = binomial(m, j) * std::pow(base, m - j);
        worst = std::max(worst, std::abs(local[j] - expected) / scale);
        zpow *= z;
    }
    return worst;
}

ExtComplex cluster_representative(const Cluster& c) {
    if (c.infinite) return ExtComplex::infinity();
    // arithmetic mean on the sphere, projected back to the plane
    Vec3 sum{};
    for (const auto& m : c.members) sum = sum + to_unit_vector(ExtComplex::finite(m));
    double n = sum.norm();
    if (n < 1e-12) {  // antipodal degenerate cluster; fall back to plane mean
        Complex acc{};
        for (const auto& m : c.members) acc += m;
        return ExtComplex::finite(acc / static_cast<double>(c.members.size()));
    }
    return from_unit_vector(sum * (1.0 / n));
}

std::vector<Cluster> single_linkage(const std::vector<ExtComplex>& points,
                                    const std::vector<int>& mults, double tol) {
    size_t n = points.size();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), size_t{0});
    auto find = [&](size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (chordal_distance(points[i], points[j]) <= tol) parent[find(i)] = find(j);

    std::vector<Cluster> clusters;
    std::vector<int> slot(n, -1);
    for (size_t i = 0; i < n; ++i) {
        size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(clusters.size());
            clusters.emplace_back();
        }
        Cluster& c = clusters[slot[r]];
        c.multiplicity += mults[i];
        if (points[i].at_infinity)
            c.infinite = true;
        else
            c.members.push_back(points[i].value);
    }
    for (auto& c : clusters) c.rep = cluster_representative(c);
    return clusters;
}

// Try to merge groups of finite clusters into single higher-multiplicity
// roots.  Eigenvalues of an exact m-fold root scatter like eps^(1/m), which
// can exceed cluster_tol; a merge is accepted only when the group's member
// roots multiply back to a near-perfect m-fold local factor, so genuinely
// separated roots are never absorbed.
void upgrade_multiplicities(std::vector<Cluster>& clusters, const std::vector<Complex>& trimmed) {
    bool changed = true;
    while (changed) {
        changed = false;
        size_t k = clusters.size();
        // coarse grouping of finite clusters within the merge window
        std::vector<size_t> finite_idx;
        for (size_t i = 0; i < k; ++i)
            if (!clusters[i].infinite) finite_idx.push_back(i);
        size_t f = finite_idx.size();
        if (f < 2) return;
        std::vector<size_t> parent(f);
        std::iota(parent.begin(), parent.end(), size_t{0});
        auto find = [&](size_t i) {
            while (parent[i] != i) i = parent[i] = parent[parent[i]];
            return i;
        };
        for (size_t i = 0; i < f; ++i)
            for (size_t j = i + 1; j < f; ++j)
                if (chordal_distance(clusters[finite_idx[i]].rep, clusters[finite_idx[j]].rep) <=
                    kMergeWindow)
                    parent[find(i)] = find(j);

        std::vector<std::vector<size_t>> groups;
        {
            std::vector<int> slot(f, -1);
            for (size_t i = 0; i < f; ++i) {
                size_t r = find(i);
                if (slot[r] < 0) {
                    slot[r] = static_cast<int>(groups.size());
                    groups.emplace_back();
                }
                groups[slot[r]].push_back(finite_idx[i]);
            }
        }

        for (const auto& group : groups) {
            if (group.size() < 2) continue;
            // subsets of the group, largest first
            size_t g = group.size();
            std::vector<unsigned> subsets;
            for (unsigned mask = 1; mask < (1u << g); ++mask)
                if (std::popcount(mask) >= 2) subsets.push_back(mask);
            std::sort(subsets.begin(), subsets.end(), [](unsigned a, unsigned b) {
                return std::popcount(a) > std::popcount(b);
            });
            for (unsigned mask : subsets) {
                std::vector<Complex> members;
                Complex center{};
                for (size_t i = 0; i < g; ++i)
                    if (mask & (1u << i)) {
                        const Cluster& c = clusters[group[i]];
                        members.insert(members.end(), c.members.begin(), c.members.end());
                    }
                int m = static_cast<int>(members.size());
                for (const auto& r : members) center += r;
                center /= static_cast<double>(m);
                Complex z = refine_multiple(trimmed, center, m);
                if (chordal_distance(ExtComplex::finite(z), ExtComplex::finite(center)) >
                    kMergeWindow)
                    continue;  // refinement ran off to an unrelated critical point

                if (local_merge_residual(members, z) <= merge_gate(trimmed)) {
                    std::vector<Cluster> next;
                    Cluster merged;
                    merged.multiplicity = m;
                    merged.members = std::move(members);
                    merged.rep = ExtComplex::finite(z);
                    for (size_t i = 0; i < clusters.size(); ++i) {
                        bool in_subset = false;
                        for (size_t j = 0; j < g; ++j)
                            if ((mask & (1u << j)) && group[j] == i) in_subset = true;
                        if (!in_subset) next.push_back(clusters[i]);
                    }
                    next.push_back(merged);
                    clusters = std::move(next);
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
}

}  // namespace

int MajoranaPolynomial::effective_degree(double drop_tol) const {
    double scale = 0.0;
    for (const auto& a : coeffs) scale = std::max(scale, std::abs(a));
    if (scale == 0.0) return -1;
    for (int l = n; l >= 0; --l)
        if (std::abs(coeffs[l]) > drop_tol * scale) return l;
    return -1;
}

std::vector<int> Constellation::multiplicities() const {
    std::vector<int> m;
    m.reserve(stars.size());
    for (const auto& s : stars) m.push_back(s.multiplicity);
    std::sort(m.rbegin(), m.rend());
    return m;
}

MajoranaPolynomial to_polynomial(const SymmetricState& state) {
    MajoranaPolynomial p;
    p.n = state.n;
    p.coeffs.resize(state.n + 1);
    for (int l = 0; l <= state.n; ++l) {
        double sign = (l % 2 == 0) ? 1.0 : -1.0;
        p.coeffs[l] = sign * std::sqrt(binomial(state.n, l)) * state.coeffs[l];
    }
    return p;
}

SymmetricState state_from_polynomial(const MajoranaPolynomial& poly) {
    std::vector<Complex> c(poly.n + 1);
    for (int l = 0; l <= poly.n; ++l) {
        double sign = (l % 2 == 0) ? 1.0 : -1.0;
        c[l] = sign * poly.coeffs[l] / std::sqrt(binomial(poly.n, l));
    }
    return SymmetricState(poly.n, std::move(c));
}

Complex eval_poly(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc{};
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

Complex eval_poly_derivative(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc{};
    for (size_t i = coeffs.size(); i-- > 1;) acc = acc * z + coeffs[i] * static_cast<double>(i);
    return acc;
}

std::vector<Complex> taylor_shift(const std::vector<Complex>& coeffs, Complex t) {
    std::vector<Complex> b = coeffs;
    int d = static_cast<int>(b.size()) - 1;
    for (int i = 0; i < d; ++i)
        for (int j = d - 1; j >= i; --j) b[j] += t * b[j + 1];
    return b;
}

Constellation find_roots(const MajoranaPolynomial& poly, double cluster_tol) {
    if (poly.coeffs.size() != static_cast<size_t>(poly.n) + 1)
        throw std::invalid_argument("coefficient list must have n+1 entries");
    if (cluster_tol <= 0.0) throw std::invalid_argument("cluster tolerance must be positive");
    int d = poly.effective_degree(kDropTol);
    if (d < 0) throw std::invalid_argument("zero polynomial");
    int n_inf = poly.n - d;

    std::vector<ExtComplex> points;
    std::vector<int> mults;
    if (d > 0) {
        std::vector<Complex> trimmed(poly.coeffs.begin(), poly.coeffs.begin() + d + 1);
        Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
        for (int i = 0; i < d; ++i) {
            comp(i, d - 1) = -trimmed[i] / trimmed[d];
            if (i > 0) comp(i, i - 1) = 1.0;
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
        for (int i = 0; i < d; ++i) {
            // members stay unpolished: the eigenvalue set of a multiple root
            // is backward-coherent and must multiply back to the coefficients
            points.push_back(ExtComplex::finite(solver.eigenvalues()(i)));
            mults.push_back(1);
        }
    }
    if (n_inf > 0) {
        points.push_back(ExtComplex::infinity());
        mults.push_back(n_inf);
    }

    auto clusters = single_linkage(points, mults, cluster_tol);
    if (d > 0) {
        std::vector<Complex> trimmed(poly.coeffs.begin(), poly.coeffs.begin() + d + 1);
        for (auto& c : clusters)
            if (!c.infinite && c.members.size() == 1)
                c.rep = ExtComplex::finite(polish_simple(trimmed, c.members[0]));
        upgrade_multiplicities(clusters, trimmed);
    }

    Constellation cons;
    cons.n = poly.n;
    for (const auto& c : clusters) cons.stars.push_back({c.rep, c.multiplicity});
    std::sort(cons.stars.begin(), cons.stars.end(), [](const Star& a, const Star& b) {
        if (a.root.at_infinity != b.root.at_infinity) return b.root.at_infinity;
        if (a.root.value.real() != b.root.value.real())
            return a.root.value.real() < b.root.value.real();
        return a.root.value.imag() < b.root.value.imag();
    });
    return cons;
}

Spinor root_to_spinor(const ExtComplex& root) {
    if (root.at_infinity) return Spinor::canonical(0.0, std::numbers::pi);
    double r = std::abs(root.value);
    double beta = 2.0 * std::atan(r);
    double alpha = (r == 0.0) ? 0.0 : std::arg(root.value);
    return Spinor::canonical(alpha, beta);
}

SymmetricState from_constellation(const Constellation& constellation) {
    if (constellation.stars.empty()) throw std::invalid_argument("empty constellation");
    int total = 0;
    for (const auto& s : constellation.stars) {
        if (s.multiplicity < 1) throw std::invalid_argument("multiplicities must be positive");
        total += s.multiplicity;
    }
    if (constellation.n != 0 && constellation.n != total)
        throw std::invalid_argument("multiplicities do not sum to n");
    int n = total;

    std::vector<std::pair<Complex, int>> finite;
    for (const auto& s : constellation.stars)
        if (!s.root.at_infinity) finite.emplace_back(s.root.value, s.multiplicity);
    auto coeffs = rebuild_coeffs(Complex{1.0, 0.0}, finite);
    coeffs.resize(n + 1, Complex{});  // stars at infinity lower the degree

    MajoranaPolynomial p;
    p.n = n;
    p.coeffs = std::move(coeffs);
    return normalize(state_from_polynomial(p));
}

}  // namespace stellar
