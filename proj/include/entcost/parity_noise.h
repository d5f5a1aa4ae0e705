#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>

namespace entcost {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

constexpr bool has_x_component(Pauli p) { return p == Pauli::X || p == Pauli::Y; }
constexpr bool has_z_component(Pauli p) { return p == Pauli::Y || p == Pauli::Z; }

// Pauli with the given X/Z components, phase discarded.
constexpr Pauli pauli_from_components(bool x, bool z) {
    return static_cast<Pauli>((x && z) ? 2 : (x ? 1 : (z ? 3 : 0)));
}

const char* to_string(Pauli p);

// Independent single-qubit depolarizing rates on the eight qubits of the
// two GHZ copies entering the parity projection.
struct DepolarizingRates {
    std::array<double, 4> copy_a{};  // qubits A_1..A_4
    std::array<double, 4> copy_b{};  // qubits B_1..B_4

    static DepolarizingRates symmetric(double p);
};

// Rates must lie in [0, 3/4]; throws std::domain_error otherwise.
void validate(const DepolarizingRates& rates);

struct ParityOutcome {
    double moment = 1.0;              // E[S]
    double accept_probability = 1.0;  // Pr(S = +1) = (1 + E[S]) / 2
};

// E[S] = prod_i (1 - 4/3 p_{A,i}) (1 - 4/3 p_{B,i}).
double parity_moment(const DepolarizingRates& rates);

ParityOutcome parity_accept_probability(const DepolarizingRates& rates);

// Small-p expansion of the symmetric acceptance probability, truncated at
// second order: 1 - (16/3) p + (224/9) p^2.
double series_approx_accept(double p);

// Recorded parity for a concrete error pattern on the eight qubits
// (order A_1..A_4, B_1..B_4): each Z component flips the sign.
int parity_sign(std::span<const Pauli, 8> errors);

// Exact acceptance probability by enumerating all 4^8 Pauli error patterns,
// weighting each by its depolarizing probability. Brute-force cross-check
// for parity_accept_probability; agrees to < 1e-12 absolute.
double exhaustive_parity_accept(const DepolarizingRates& rates);

// Conjugation of a two-qubit Pauli through CNOT(control -> target), phase
// discarded: X on the control propagates X to the target, Z on the target
// propagates Z to the control.
std::pair<Pauli, Pauli> cnot_conjugate(Pauli on_control, Pauli on_target);

// Error placement of a noisy Bell pair consumed by a teleported CNOT:
// the Z component lands on the control, the X component on the target.
std::pair<Pauli, Pauli> teleported_cnot_error_map(Pauli bell_error);

}  // namespace entcost
