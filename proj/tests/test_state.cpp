#include <doctest.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "stellar/oracle.hpp"
#include "stellar/state.hpp"
#include "test_helpers.hpp"

using namespace stellar;
using namespace stellar::testing;

TEST_CASE("normalize scales and rejects the zero state") {
    auto s = normalize(SymmetricState(2, {{2, 0}, {0, 0}, {0, 0}}));
    CHECK(s.coeffs[0].real() == doctest::Approx(1.0).epsilon(1e-12));

    auto ghz = normalize(SymmetricState(3, {{1, 0}, {0, 0}, {0, 0}, {1, 0}}));
    CHECK(std::abs(ghz.coeffs[0] - Complex{1 / std::sqrt(2.0), 0}) < 1e-12);
    CHECK(std::abs(ghz.coeffs[3] - Complex{1 / std::sqrt(2.0), 0}) < 1e-12);

    double total = 0;
    for (const auto& c : ghz.coeffs) total += std::norm(c);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(normalize(SymmetricState(1, {{0, 0}, {0, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricState(3, {{1, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricState(0, {{1, 0}}), std::invalid_argument);
}

TEST_CASE("dicke_vector places uniform amplitudes on fixed-zero-count bitstrings") {
    auto v = dicke_vector(2, 1);  // one zero: bitstrings 01 and 10
    CHECK(std::abs(v.amps[0b01] - Complex{1 / std::sqrt(2.0), 0}) < 1e-12);
    CHECK(std::abs(v.amps[0b10] - Complex{1 / std::sqrt(2.0), 0}) < 1e-12);
    CHECK(std::abs(v.amps[0b00]) == 0.0);
    CHECK(std::abs(v.amps[0b11]) == 0.0);

    auto all_zeros = dicke_vector(3, 3);
    CHECK(std::abs(all_zeros.amps[0b000] - Complex{1, 0}) < 1e-12);
    auto all_ones = dicke_vector(3, 0);
    CHECK(std::abs(all_ones.amps[0b111] - Complex{1, 0}) < 1e-12);

    CHECK_THROWS(dicke_vector(3, 4));
    CHECK_THROWS(dicke_vector(3, -1));
}

TEST_CASE("expand reproduces GHZ and single-qubit kets") {
    auto v = expand(normalize(ghz3()));
    CHECK(std::abs(v.amps[0b000] - Complex{1 / std::sqrt(2.0), 0}) < 1e-12);
    CHECK(std::abs(v.amps[0b111] - Complex{1 / std::sqrt(2.0), 0}) < 1e-12);
    for (unsigned b = 1; b < 7; ++b) CHECK(std::abs(v.amps[b]) < 1e-12);

    auto q = expand(SymmetricState(1, {{0, 0}, {1, 0}}));
    CHECK(std::abs(q.amps[0] - Complex{1, 0}) < 1e-12);
    CHECK(std::abs(q.amps[1]) < 1e-12);
}

TEST_CASE("expand amplitudes depend only on the bitstring popcount") {
    auto rng = make_rng(11);
    auto v = expand(random_state(rng, 4));
    for (unsigned b = 0; b < 16; ++b)
        for (unsigned c = 0; c < 16; ++c)
            if (std::popcount(b) == std::popcount(c))
                CHECK(std::abs(v.amps[b] - v.amps[c]) < 1e-10);
}

TEST_CASE("symmetrize_spinors: product states, GHZ placement, oracle agreement") {
    auto rng = make_rng(12);

    SUBCASE("identical spinors give a product state with pure reductions") {
        Spinor s = Spinor::canonical(1.1, 0.8);
        auto st = symmetrize_spinors({s, s, s});
        auto v = expand(st);
        for (int q = 0; q < 3; ++q)
            CHECK(oracle::reduce_one(v, q).purity() == doctest::Approx(1.0).epsilon(1e-9));
    }

    SUBCASE("equatorial triple at 0, 2pi/3, 4pi/3 is GHZ up to phase") {
        double b = std::numbers::pi / 2;
        auto st = symmetrize_spinors({Spinor::canonical(0, b),
                                      Spinor::canonical(2 * std::numbers::pi / 3, b),
                                      Spinor::canonical(4 * std::numbers::pi / 3, b)});
        CHECK(fidelity(st, normalize(ghz3())) == doctest::Approx(1.0).epsilon(1e-9));
    }

    SUBCASE("two random spinors match the explicit permutation sum") {
        auto sp = random_spinors(rng, 2);
        CHECK(fidelity(expand(symmetrize_spinors(sp)), oracle::brute_symmetrize(sp)) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }

    SUBCASE("invariant under permuting the input list") {
        auto sp = random_spinors(rng, 4);
        auto a = symmetrize_spinors(sp);
        std::swap(sp[0], sp[2]);
        std::swap(sp[1], sp[3]);
        CHECK(fidelity(a, symmetrize_spinors(sp)) == doctest::Approx(1.0).epsilon(1e-9));
    }

    SUBCASE("spinor count bound") {
        CHECK_THROWS_AS(symmetrize_spinors(std::vector<Spinor>(11)), std::invalid_argument);
    }
}

TEST_CASE("fidelity basics") {
    auto v = expand(normalize(ghz3()));
    CHECK(fidelity(v, v) == doctest::Approx(1.0).epsilon(1e-12));

    auto zeros = dicke_vector(3, 3), ones = dicke_vector(3, 0);
    CHECK(fidelity(zeros, ones) == doctest::Approx(0.0).epsilon(1e-12));

    CHECK(fidelity(normalize(ghz3()), normalize(w3())) == doctest::Approx(0.0).epsilon(1e-12));

    FullStateVector other = dicke_vector(2, 0);
    CHECK_THROWS_AS(fidelity(v, other), std::invalid_argument);
}

TEST_CASE("rotate_all_qubits agrees with rotating every spinor") {
    auto rng = make_rng(13);
    for (int n : {2, 3, 5}) {
        auto sp = random_spinors(rng, n);
        auto st = symmetrize_spinors(sp);
        Su2 u = random_rotation(rng);
        auto rotated_coeffwise = rotate_all_qubits(st, u);

        std::vector<Spinor> rotated_spinors;
        for (const auto& s : sp) {
            ExtComplex root = mobius(u, ExtComplex::finite(
                                            std::tan(s.beta / 2) *
                                            std::exp(Complex{0, s.alpha})));
            rotated_spinors.push_back(root_to_spinor(root));
        }
        auto rotated_spinorwise = symmetrize_spinors(rotated_spinors);
        CHECK(fidelity(rotated_coeffwise, rotated_spinorwise) ==
              doctest::Approx(1.0).epsilon(1e-9));
    }
}
