#include "stellar/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stellar {

namespace {

constexpr double kCrossTol = 1e-7;  // scale-relative tolerance for coefficient conditions

std::string cyclic_name(int k) { return "C" + std::to_string(k); }

Vec3 sign_normalized(const Vec3& v) {
    constexpr double eps = 1e-12;
    if (v.z < -eps) return v * -1.0;
    if (std::abs(v.z) <= eps) {
        if (v.y < -eps) return v * -1.0;
        if (std::abs(v.y) <= eps && v.x < 0.0) return v * -1.0;
    }
    return v;
}

bool lex_greater(const Vec3& a, const Vec3& b) {
    if (a.z != b.z) return a.z > b.z;
    if (a.y != b.y) return a.y > b.y;
    return a.x > b.x;
}

// Does rotating every star by angle about axis reproduce the multiset?
bool rotation_matches(const std::vector<Vec3>& dirs, const std::vector<int>& mults,
                      const Vec3& axis, double angle, double tol) {
    size_t n = dirs.size();
    std::vector<bool> used(n, false);
    for (size_t i = 0; i < n; ++i) {
        Vec3 w = rotate_about_axis(dirs[i], axis, angle);
        double best = tol;
        int pick = -1;
        for (size_t j = 0; j < n; ++j) {
            if (used[j] || mults[j] != mults[i]) continue;
            double d = (w - dirs[j]).norm();
            if (d <= best) {
                best = d;
                pick = static_cast<int>(j);
            }
        }
        if (pick < 0) return false;
        used[pick] = true;
    }
    return true;
}

struct DepressedCoeffs {
    Complex p, q, r;
    bool quartic = false;
    double eps = kCrossTol;  // widened when the clustering tolerance is coarse
};

double scale_power(const DepressedCoeffs& d, int dim) {
    double rho = 1.0;
    rho = std::max(rho, std::sqrt(std::abs(d.p)));
    rho = std::max(rho, std::cbrt(std::abs(d.q)));
    if (d.quartic) rho = std::max(rho, std::pow(std::abs(d.r), 0.25));
    return std::pow(rho, dim);
}

bool near_zero(const DepressedCoeffs& d, Complex value, int dim) {
    return std::abs(value) <= d.eps * scale_power(d, dim);
}

// Verify that the coefficient-level root structure of the depressed form is
// consistent with the partition-based label.  A repeated-root condition is
// only asserted positively (clusters the partition merged must show up in the
// coefficients); distinct-root labels are rejected only when the coefficients
// insist on full degeneracy, since near the clustering boundary a tiny
// discriminant is legitimate for split roots.
void cross_check(EntanglementClass label, const DepressedCoeffs& d) {
    const Complex p = d.p, q = d.q, r = d.r;
    bool ok = true;
    if (!d.quartic) {
        bool triple = near_zero(d, p, 2) && near_zero(d, q, 3);
        Complex disc = -4.0 * p * p * p - 27.0 * q * q;
        switch (label) {
            case EntanglementClass::Separable: ok = triple; break;
            case EntanglementClass::W: ok = near_zero(d, disc, 6) && !triple; break;
            case EntanglementClass::GHZ:
            case EntanglementClass::Generic3: ok = !triple; break;
            default: ok = false;
        }
    } else {
        bool quadruple = near_zero(d, p, 2) && near_zero(d, q, 3) && near_zero(d, r, 4);
        Complex disc = 16.0 * p * p * p * p * r - 4.0 * p * p * p * q * q -
                       128.0 * p * p * r * r + 144.0 * p * q * q * r - 27.0 * q * q * q * q +
                       256.0 * r * r * r;
        // triple root + simple root: 8p^3 + 27q^2 = 0 and p^2 + 12r = 0
        bool triple = near_zero(d, 8.0 * p * p * p + 27.0 * q * q, 6) &&
                      near_zero(d, p * p + 12.0 * r, 4);
        // two double roots: q = 0 and r = p^2/4
        bool pair2 = near_zero(d, q, 3) && near_zero(d, r - p * p / 4.0, 4);
        switch (label) {
            case EntanglementClass::Separable4: ok = quadruple; break;
            case EntanglementClass::W4: ok = triple && !quadruple; break;
            case EntanglementClass::W2x2: ok = pair2 && !quadruple; break;
            case EntanglementClass::TwoOneOne: ok = near_zero(d, disc, 12) && !quadruple; break;
            case EntanglementClass::GHZ4:
            case EntanglementClass::Generic4: ok = !quadruple; break;
            default: ok = false;
        }
    }
    if (!ok)
        throw std::logic_error("classification cross-check failed: partition label '" +
                               to_string(label) + "' does not match the depressed form");
}

}  // namespace

std::string SymmetryReport::group_label() const {
    if (continuous) return "Cinf";
    return cyclic_order <= 1 ? "e" : cyclic_name(cyclic_order);
}

std::string to_string(EntanglementClass c) {
    switch (c) {
        case EntanglementClass::Separable: return "Separable";
        case EntanglementClass::W: return "W";
        case EntanglementClass::GHZ: return "GHZ";
        case EntanglementClass::Generic3: return "Generic3";
        case EntanglementClass::Separable4: return "Separable4";
        case EntanglementClass::W4: return "W4";
        case EntanglementClass::W2x2: return "W2x2";
        case EntanglementClass::TwoOneOne: return "TwoOneOne";
        case EntanglementClass::GHZ4: return "GHZ4";
        case EntanglementClass::Generic4: return "Generic4";
    }
    return "?";
}

MultiplicityPartition partition(const Constellation& constellation) {
    return constellation.multiplicities();
}

SymmetryReport detect_cyclic_symmetry(const Constellation& constellation, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    std::vector<Vec3> dirs;
    std::vector<int> mults;
    int n = 0;
    for (const auto& s : constellation.stars) {
        dirs.push_back(to_unit_vector(s.root));
        mults.push_back(s.multiplicity);
        n += s.multiplicity;
    }
    if (dirs.empty()) throw std::invalid_argument("empty constellation");

    SymmetryReport rep;

    // collinear case: every star on one axis through the center
    bool collinear = true;
    for (size_t i = 1; i < dirs.size() && collinear; ++i)
        if (dirs[0].cross(dirs[i]).norm() > tol) collinear = false;
    if (collinear) {
        rep.continuous = true;
        rep.cyclic_order = 0;
        rep.axis = sign_normalized(dirs[0]);
        return rep;
    }

    std::vector<Vec3> candidates;
    auto push = [&](const Vec3& v) {
        if (v.norm() < 1e-9) return;
        Vec3 u = sign_normalized(v.normalized());
        for (const auto& c : candidates)
            if (c.dot(u) > 1.0 - 1e-10) return;
        candidates.push_back(u);
    };
    for (const auto& v : dirs) push(v);
    for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = i + 1; j < dirs.size(); ++j) {
            push(dirs[i] + dirs[j]);
            push(dirs[i].cross(dirs[j]));
        }
    Vec3 centroid{};
    for (size_t i = 0; i < dirs.size(); ++i) centroid = centroid + dirs[i] * double(mults[i]);
    push(centroid);

    for (int k = n; k >= 2; --k) {
        double angle = 2.0 * std::numbers::pi / k;
        const Vec3* best = nullptr;
        for (const auto& axis : candidates) {
            if (!rotation_matches(dirs, mults, axis, angle, tol)) continue;
            if (!best || lex_greater(axis, *best)) best = &axis;
        }
        if (best) {
            rep.cyclic_order = k;
            rep.axis = *best;
            return rep;
        }
    }
    rep.cyclic_order = 1;
    return rep;
}

ClassReport classify_state(const SymmetricState& state, double tol, double cluster_tol) {
    if (state.n != 3 && state.n != 4)
        throw std::invalid_argument("classification table defined for 3 and 4 qubits");
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");

    MajoranaPolynomial poly = to_polynomial(state);
    Constellation cons = find_roots(poly, cluster_tol);
    ClassReport report;
    report.partition = cons.multiplicities();
    report.symmetry = detect_cyclic_symmetry(cons, std::max(tol, cluster_tol));

    // depressed coefficients; one deterministic rotation when a star sits at infinity
    MajoranaPolynomial working = poly;
    if (working.effective_degree() < state.n) {
        working = to_polynomial(
            rotate_all_qubits(state, Su2::rotation_y(kPrerotationAngle)));
        report.prerotated = true;
    }

    DepressedCoeffs d;
    d.eps = std::max(kCrossTol, 10.0 * cluster_tol);
    if (state.n == 3) {
        DepressedCubic dc = depress_cubic(working);
        d.p = dc.p;
        d.q = dc.q;
        report.max_ghz = std::abs(std::abs(dc.q) - 1.0) <= tol;
    } else {
        DepressedQuartic dq = depress_quartic(working);
        d.p = dq.p;
        d.q = dq.q;
        d.r = dq.r;
        d.quartic = true;
        report.max_ghz = std::abs(std::abs(dq.r) - 1.0) <= tol;
    }
    report.p = d.p;
    report.q = d.q;
    report.r = d.r;

    const auto& part = report.partition;
    if (state.n == 3) {
        if (part == MultiplicityPartition{3})
            report.label = EntanglementClass::Separable;
        else if (part == MultiplicityPartition{2, 1})
            report.label = EntanglementClass::W;
        else
            report.label = std::abs(d.p) <= tol * std::max(1.0, std::abs(d.q))
                               ? EntanglementClass::GHZ
                               : EntanglementClass::Generic3;
    } else {
        double m = std::max(1.0, std::abs(d.r));
        if (part == MultiplicityPartition{4})
            report.label = EntanglementClass::Separable4;
        else if (part == MultiplicityPartition{3, 1})
            report.label = EntanglementClass::W4;
        else if (part == MultiplicityPartition{2, 2})
            report.label = EntanglementClass::W2x2;
        else if (part == MultiplicityPartition{2, 1, 1})
            report.label = EntanglementClass::TwoOneOne;
        else
            report.label = (std::abs(d.p) <= tol * m && std::abs(d.q) <= tol * m)
                               ? EntanglementClass::GHZ4
                               : EntanglementClass::Generic4;
    }

    cross_check(report.label, d);

    // class-group lookup table; the geometric order fills the unnamed cases
    switch (report.label) {
        case EntanglementClass::Separable:
        case EntanglementClass::Separable4: report.group_label = "e"; break;
        case EntanglementClass::W:
        case EntanglementClass::W4:
        case EntanglementClass::W2x2: report.group_label = "C2"; break;
        case EntanglementClass::GHZ: report.group_label = "C3"; break;
        case EntanglementClass::GHZ4: report.group_label = "C4"; break;
        default: report.group_label = report.symmetry.group_label(); break;
    }
    return report;
}

}  // namespace stellar
