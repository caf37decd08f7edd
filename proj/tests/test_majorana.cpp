#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stellar/majorana.hpp"
#include "stellar/oracle.hpp"
#include "test_helpers.hpp"

using namespace stellar;
using namespace stellar::testing;

namespace {

// multiset match between a constellation and expected extended roots
void check_star_multiset(const Constellation& cons, std::vector<ExtComplex> expected,
                         double tol) {
    std::vector<ExtComplex> got;
    for (const auto& s : cons.stars)
        for (int k = 0; k < s.multiplicity; ++k) got.push_back(s.root);
    REQUIRE(got.size() == expected.size());
    for (const auto& g : got) {
        auto it = std::min_element(expected.begin(), expected.end(),
                                   [&](const ExtComplex& a, const ExtComplex& b) {
                                       return chordal_distance(g, a) < chordal_distance(g, b);
                                   });
        REQUIRE(it != expected.end());
        CHECK(chordal_distance(g, *it) < tol);
        expected.erase(it);
    }
}

}  // namespace

TEST_CASE("to_polynomial applies the alternating binomial weighting") {
    auto p = to_polynomial(normalize(ghz3()));
    double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(p.coeffs[0] - Complex{r, 0}) < 1e-12);
    CHECK(std::abs(p.coeffs[1]) < 1e-12);
    CHECK(std::abs(p.coeffs[2]) < 1e-12);
    CHECK(std::abs(p.coeffs[3] - Complex{-r, 0}) < 1e-12);

    // all-zeros product state: only the eps^3 monomial
    auto mono = to_polynomial(SymmetricState(3, {{0, 0}, {0, 0}, {0, 0}, {1, 0}}));
    for (int l = 0; l < 3; ++l) CHECK(std::abs(mono.coeffs[l]) < 1e-12);
    CHECK(std::abs(mono.coeffs[3] + Complex{1, 0}) < 1e-12);

    auto rng = make_rng(21);
    auto s = random_state(rng, 4);
    auto q = to_polynomial(s);
    for (int l = 0; l <= 4; ++l)
        CHECK(std::abs(q.coeffs[l]) ==
              doctest::Approx(std::sqrt(binomial(4, l)) * std::abs(s.coeffs[l])).epsilon(1e-12));
}

TEST_CASE("find_roots: GHZ cube roots of unity") {
    auto cons = find_roots(to_polynomial(normalize(ghz3())));
    REQUIRE(cons.stars.size() == 3);
    Complex w = std::exp(Complex{0, 2 * std::numbers::pi / 3});
    check_star_multiset(cons,
                        {ExtComplex::finite({1, 0}), ExtComplex::finite(w),
                         ExtComplex::finite(w * w)},
                        1e-9);
}

TEST_CASE("find_roots: exact triple root is one star") {
    // (1 - eps)^3 = 1 - 3 eps + 3 eps^2 - eps^3
    MajoranaPolynomial p;
    p.n = 3;
    p.coeffs = {{1, 0}, {-3, 0}, {3, 0}, {-1, 0}};
    auto cons = find_roots(p);
    REQUIRE(cons.stars.size() == 1);
    CHECK(cons.stars[0].multiplicity == 3);
    CHECK(chordal_distance(cons.stars[0].root, ExtComplex::finite({1, 0})) < 1e-9);
}

TEST_CASE("find_roots: degree drop produces stars at infinity") {
    MajoranaPolynomial p;
    p.n = 3;
    p.coeffs = {{0.4, 0.1}, {1.0, 0}, {0, 0}, {0, 0}};
    auto cons = find_roots(p);
    int inf_count = 0, fin_count = 0;
    for (const auto& s : cons.stars)
        (s.root.at_infinity ? inf_count : fin_count) += s.multiplicity;
    CHECK(inf_count == 2);
    CHECK(fin_count == 1);

    // cross-check through the spinor route: two spinors at the south pole
    auto st = symmetrize_spinors({root_to_spinor(ExtComplex::finite({-0.4, -0.1})),
                                  Spinor::canonical(0, std::numbers::pi),
                                  Spinor::canonical(0, std::numbers::pi)});
    auto cons2 = find_roots(to_polynomial(st));
    check_star_multiset(cons2,
                        {ExtComplex::finite({-0.4, -0.1}), ExtComplex::infinity(),
                         ExtComplex::infinity()},
                        1e-8);

    MajoranaPolynomial zero;
    zero.n = 2;
    zero.coeffs = {{0, 0}, {0, 0}, {0, 0}};
    CHECK_THROWS_AS(find_roots(zero), std::invalid_argument);
}

TEST_CASE("root_to_spinor projections") {
    auto s0 = root_to_spinor(ExtComplex::finite({0, 0}));
    CHECK(s0.alpha == 0.0);
    CHECK(s0.beta == 0.0);

    auto s1 = root_to_spinor(ExtComplex::finite({1, 0}));
    CHECK(s1.alpha == doctest::Approx(0.0));
    CHECK(s1.beta == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));

    auto sw = root_to_spinor(ExtComplex::finite(std::exp(Complex{0, 2 * std::numbers::pi / 3})));
    CHECK(sw.alpha == doctest::Approx(2 * std::numbers::pi / 3).epsilon(1e-12));
    CHECK(sw.beta == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));

    auto sinf = root_to_spinor(ExtComplex::infinity());
    CHECK(sinf.alpha == 0.0);
    CHECK(sinf.beta == doctest::Approx(std::numbers::pi));
}

TEST_CASE("from_constellation inverts the pipeline") {
    Complex w = std::exp(Complex{0, 2 * std::numbers::pi / 3});
    Constellation ghz_cons;
    ghz_cons.n = 3;
    ghz_cons.stars = {{ExtComplex::finite({1, 0}), 1},
                      {ExtComplex::finite(w), 1},
                      {ExtComplex::finite(w * w), 1}};
    CHECK(fidelity(from_constellation(ghz_cons), normalize(ghz3())) ==
          doctest::Approx(1.0).epsilon(1e-10));

    Constellation triple0;
    triple0.n = 3;
    triple0.stars = {{ExtComplex::finite({0, 0}), 3}};
    auto st = from_constellation(triple0);
    // all spinors at the |0> pole: only the all-zeros ket
    CHECK(std::abs(st.coeffs[3]) == doctest::Approx(1.0).epsilon(1e-12));

    auto rng = make_rng(22);
    auto roots = separated_roots(rng, 3, 0.1);
    Constellation cons;
    cons.n = 3;
    for (const auto& r : roots) cons.stars.push_back({ExtComplex::finite(r), 1});
    std::vector<Spinor> spinors;
    for (const auto& r : roots) spinors.push_back(root_to_spinor(ExtComplex::finite(r)));
    CHECK(fidelity(from_constellation(cons), symmetrize_spinors(spinors)) ==
          doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(from_constellation(Constellation{}), std::invalid_argument);
}

TEST_CASE("roundtrip A: state -> roots -> state for N = 2..7") {
    auto rng = make_rng(23);
    for (int n = 2; n <= 7; ++n) {
        for (int rep = 0; rep < 30; ++rep) {
            auto s = random_state(rng, n);
            auto cons = find_roots(to_polynomial(s));
            int total = 0;
            for (const auto& star : cons.stars) total += star.multiplicity;
            CHECK(total == n);
            CHECK(fidelity(from_constellation(cons), s) >= 1.0 - 1e-8);
        }
    }
}

TEST_CASE("roundtrip B: spinors -> state -> roots recovers tan(beta/2)e^{i alpha}") {
    auto rng = make_rng(24);
    for (int n = 3; n <= 6; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            auto sp = random_spinors(rng, n);
            auto cons = find_roots(to_polynomial(symmetrize_spinors(sp)));
            std::vector<ExtComplex> expected;
            for (const auto& s : sp)
                expected.push_back(ExtComplex::finite(std::tan(s.beta / 2) *
                                                      std::exp(Complex{0, s.alpha})));
            check_star_multiset(cons, expected, 1e-7);
        }
    }
}

TEST_CASE("rotation covariance: rotating the spinors rotates the stars") {
    auto rng = make_rng(25);
    for (int rep = 0; rep < 10; ++rep) {
        auto sp = random_spinors(rng, 4);
        Su2 u = random_rotation(rng);

        auto cons = find_roots(to_polynomial(symmetrize_spinors(sp)));
        std::vector<Spinor> rotated;
        for (const auto& s : sp) {
            ExtComplex root = ExtComplex::finite(std::tan(s.beta / 2) *
                                                 std::exp(Complex{0, s.alpha}));
            rotated.push_back(root_to_spinor(mobius(u, root)));
        }
        auto cons_rot = find_roots(to_polynomial(symmetrize_spinors(rotated)));

        std::vector<ExtComplex> expected;
        for (const auto& s : cons.stars)
            for (int k = 0; k < s.multiplicity; ++k) expected.push_back(mobius(u, s.root));
        check_star_multiset(cons_rot, expected, 1e-7);
    }
}

TEST_CASE("refit_polynomial matches find_roots inputs") {
    Complex w = std::exp(Complex{0, 2 * std::numbers::pi / 3});
    auto p = oracle::refit_polynomial(
        {ExtComplex::finite({1, 0}), ExtComplex::finite(w), ExtComplex::finite(w * w)}, 3);
    // eps^3 - 1 up to scale
    CHECK(std::abs(p.coeffs[0] / p.coeffs[3] + Complex{1, 0}) < 1e-12);
    CHECK(std::abs(p.coeffs[1]) < 1e-12);
    CHECK(std::abs(p.coeffs[2]) < 1e-12);

    auto mono = oracle::refit_polynomial({ExtComplex::finite({0, 0}), ExtComplex::finite({0, 0}),
                                          ExtComplex::finite({0, 0})},
                                         3);
    CHECK(std::abs(mono.coeffs[3] - Complex{1, 0}) < 1e-12);

    auto rng = make_rng(26);
    for (int rep = 0; rep < 20; ++rep) {
        auto roots = separated_roots(rng, 4, 0.2);
        std::vector<ExtComplex> ext;
        for (const auto& r : roots) ext.push_back(ExtComplex::finite(r));
        auto cons = find_roots(oracle::refit_polynomial(ext, 4));
        check_star_multiset(cons, ext, 1e-8);
    }
}
