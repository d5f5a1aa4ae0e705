#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "entcost/parity_noise.h"

using namespace entcost;

namespace {

// deterministic generator for property scans, independent of the library RNG
struct TestRng {
    std::uint64_t state;
    double next_unit() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
};

DepolarizingRates random_rates(TestRng& rng) {
    DepolarizingRates rates;
    for (int i = 0; i < 4; ++i) {
        rates.copy_a[i] = 0.75 * rng.next_unit();
        rates.copy_b[i] = 0.75 * rng.next_unit();
    }
    return rates;
}

}  // namespace

TEST_CASE("parity moment") {
    CHECK(parity_moment(DepolarizingRates::symmetric(0.0)) == 1.0);

    DepolarizingRates one_dead;
    one_dead.copy_a[0] = 0.75;  // that factor vanishes exactly
    CHECK(parity_moment(one_dead) == 0.0);

    CHECK(parity_moment(DepolarizingRates::symmetric(0.01)) ==
          doctest::Approx(0.8981805592744195).epsilon(1e-13));
}

TEST_CASE("moment factorizes over qubits") {
    for (const double p : {0.01, 0.2, 0.5, 0.74}) {
        for (int q = 0; q < 8; ++q) {
            DepolarizingRates rates;
            (q < 4 ? rates.copy_a[q] : rates.copy_b[q - 4]) = p;
            CHECK(parity_moment(rates) == 1.0 - (4.0 * p) / 3.0);
        }
    }
}

TEST_CASE("acceptance probability from the moment") {
    CHECK(parity_accept_probability(DepolarizingRates::symmetric(0.0)).accept_probability == 1.0);
    CHECK(parity_accept_probability(DepolarizingRates::symmetric(0.75)).accept_probability == 0.5);
    CHECK(parity_accept_probability(DepolarizingRates::symmetric(0.01)).accept_probability ==
          doctest::Approx(0.9490902796372097).epsilon(1e-13));

    TestRng rng{11};
    for (int k = 0; k < 200; ++k) {
        const ParityOutcome outcome = parity_accept_probability(random_rates(rng));
        CHECK(outcome.accept_probability == 0.5 * (1.0 + outcome.moment));
        CHECK(outcome.accept_probability >= 0.5);
        CHECK(outcome.accept_probability <= 1.0);
    }
}

TEST_CASE("acceptance decreases strictly with symmetric noise") {
    double previous = parity_accept_probability(DepolarizingRates::symmetric(0.0)).accept_probability;
    for (int step = 1; step <= 60; ++step) {
        const double p = 0.75 * step / 60.0;
        const double accept = parity_accept_probability(DepolarizingRates::symmetric(p)).accept_probability;
        CHECK(accept < previous);
        previous = accept;
    }
}

TEST_CASE("series approximation values") {
    CHECK(series_approx_accept(0.0) == 1.0);
    CHECK(series_approx_accept(1e-4) == doctest::Approx(0.9994669155555556).epsilon(1e-14));
    CHECK(series_approx_accept(0.001) == doctest::Approx(0.9946915555555556).epsilon(1e-14));
    CHECK(series_approx_accept(0.01) == doctest::Approx(0.9491555555555555).epsilon(1e-14));
}

TEST_CASE("series error stays below the calibrated cubic bound") {
    // the p^3 coefficient of the exact expansion is 1792/27 ~ 66.4; 70 covers
    // the whole range p <= 0.05
    for (int step = 1; step <= 50; ++step) {
        const double p = 0.05 * step / 50.0;
        const double exact = parity_accept_probability(DepolarizingRates::symmetric(p)).accept_probability;
        CHECK(std::abs(exact - series_approx_accept(p)) <= 70.0 * p * p * p);
    }
}

TEST_CASE("exhaustive enumeration matches the closed form") {
    CHECK(exhaustive_parity_accept(DepolarizingRates::symmetric(0.0)) == 1.0);

    // a single noisy qubit flips the parity with probability 2/3 * rate
    for (const double rate : {0.1, 0.3, 0.75}) {
        DepolarizingRates rates;
        rates.copy_b[2] = rate;
        CHECK(exhaustive_parity_accept(rates) ==
              doctest::Approx(1.0 - (2.0 / 3.0) * rate).epsilon(1e-14));
    }

    const DepolarizingRates p01 = DepolarizingRates::symmetric(0.1);
    const double direct = 0.5 * (1.0 + std::pow(1.0 - (4.0 * 0.1) / 3.0, 8.0));
    CHECK(std::abs(exhaustive_parity_accept(p01) - direct) <= 1e-12);

    TestRng rng{2024};
    for (int k = 0; k < 100; ++k) {
        const DepolarizingRates rates = random_rates(rng);
        const double oracle = exhaustive_parity_accept(rates);
        const double formula = parity_accept_probability(rates).accept_probability;
        CHECK(std::abs(oracle - formula) <= 1e-12);
    }
}

TEST_CASE("conjugation route assigns the same sign to every error pattern") {
    // conjugating the measured X-parity factors through the CNOT layer
    // produces X x X on every pair
    CHECK(cnot_conjugate(Pauli::X, Pauli::I) == std::pair{Pauli::X, Pauli::X});

    // For each of the 4^8 patterns: propagate the error through the CNOT
    // layer, then count Z components on the measured register only. That
    // sign must match the direct per-qubit rule.
    for (std::uint32_t pattern = 0; pattern < (1u << 16); ++pattern) {
        std::array<Pauli, 8> errors{};
        std::uint32_t bits = pattern;
        for (int q = 0; q < 8; ++q) {
            errors[q] = static_cast<Pauli>(bits & 3u);
            bits >>= 2;
        }
        int propagated_sign = 1;
        for (int i = 0; i < 4; ++i) {
            const auto [on_control, on_target] = cnot_conjugate(errors[i], errors[i + 4]);
            (void)on_target;  // the X-parity on the measured register ignores the other half
            if (has_z_component(on_control)) {
                propagated_sign = -propagated_sign;
            }
        }
        REQUIRE(propagated_sign == parity_sign(errors));
    }
}

TEST_CASE("CNOT conjugation table") {
    using P = Pauli;
    // spec'd anchors
    CHECK(cnot_conjugate(P::X, P::I) == std::pair{P::X, P::X});
    CHECK(cnot_conjugate(P::I, P::Z) == std::pair{P::Z, P::Z});
    CHECK(cnot_conjugate(P::I, P::I) == std::pair{P::I, P::I});
    CHECK(cnot_conjugate(P::Y, P::I) == std::pair{P::Y, P::X});
    // remaining pairs, phases dropped
    CHECK(cnot_conjugate(P::I, P::X) == std::pair{P::I, P::X});
    CHECK(cnot_conjugate(P::I, P::Y) == std::pair{P::Z, P::Y});
    CHECK(cnot_conjugate(P::X, P::X) == std::pair{P::X, P::I});
    CHECK(cnot_conjugate(P::X, P::Y) == std::pair{P::Y, P::Z});
    CHECK(cnot_conjugate(P::X, P::Z) == std::pair{P::Y, P::Y});
    CHECK(cnot_conjugate(P::Y, P::X) == std::pair{P::Y, P::I});
    CHECK(cnot_conjugate(P::Y, P::Y) == std::pair{P::X, P::Z});
    CHECK(cnot_conjugate(P::Y, P::Z) == std::pair{P::X, P::Y});
    CHECK(cnot_conjugate(P::Z, P::I) == std::pair{P::Z, P::I});
    CHECK(cnot_conjugate(P::Z, P::X) == std::pair{P::Z, P::X});
    CHECK(cnot_conjugate(P::Z, P::Y) == std::pair{P::I, P::Y});
    CHECK(cnot_conjugate(P::Z, P::Z) == std::pair{P::I, P::Z});

    // a CNOT is an involution: conjugating twice restores the pair
    for (int c = 0; c < 4; ++c) {
        for (int t = 0; t < 4; ++t) {
            const auto once = cnot_conjugate(static_cast<P>(c), static_cast<P>(t));
            const auto twice = cnot_conjugate(once.first, once.second);
            CHECK(twice == std::pair{static_cast<P>(c), static_cast<P>(t)});
        }
    }
}

TEST_CASE("teleported CNOT splits Bell-pair errors by component") {
    CHECK(teleported_cnot_error_map(Pauli::Z) == std::pair{Pauli::Z, Pauli::I});
    CHECK(teleported_cnot_error_map(Pauli::X) == std::pair{Pauli::I, Pauli::X});
    CHECK(teleported_cnot_error_map(Pauli::I) == std::pair{Pauli::I, Pauli::I});
    CHECK(teleported_cnot_error_map(Pauli::Y) == std::pair{Pauli::Z, Pauli::X});
}

TEST_CASE("rates outside [0, 3/4] are rejected") {
    CHECK_THROWS_AS(parity_moment(DepolarizingRates::symmetric(0.76)), std::domain_error);
    CHECK_THROWS_AS(parity_moment(DepolarizingRates::symmetric(-0.01)), std::domain_error);
    DepolarizingRates rates;
    rates.copy_b[3] = 0.7500001;
    CHECK_THROWS_AS(exhaustive_parity_accept(rates), std::domain_error);
    CHECK_NOTHROW(parity_moment(DepolarizingRates::symmetric(0.75)));
}
