#include "entcost/parity_noise.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace entcost {

const char* to_string(Pauli p) {
    switch (p) {
        case Pauli::I: return "I";
        case Pauli::X: return "X";
        case Pauli::Y: return "Y";
        case Pauli::Z: return "Z";
    }
    return "?";
}

DepolarizingRates DepolarizingRates::symmetric(double p) {
    DepolarizingRates rates;
    rates.copy_a.fill(p);
    rates.copy_b.fill(p);
    return rates;
}

void validate(const DepolarizingRates& rates) {
    auto check = [](double p, const char* reg, int i) {
        if (!(p >= 0.0) || p > 0.75) {
            throw std::domain_error("depolarizing rate p_{" + std::string(reg) + "," + std::to_string(i + 1) +
                                    "} must lie in [0, 3/4], got " + std::to_string(p));
        }
    };
    for (int i = 0; i < 4; ++i) {
        check(rates.copy_a[i], "A", i);
        check(rates.copy_b[i], "B", i);
    }
}

double parity_moment(const DepolarizingRates& rates) {
    validate(rates);
    double moment = 1.0;
    for (int i = 0; i < 4; ++i) {
        moment *= 1.0 - (4.0 * rates.copy_a[i]) / 3.0;
        moment *= 1.0 - (4.0 * rates.copy_b[i]) / 3.0;
    }
    return moment;
}

ParityOutcome parity_accept_probability(const DepolarizingRates& rates) {
    ParityOutcome outcome;
    outcome.moment = parity_moment(rates);
    outcome.accept_probability = 0.5 * (1.0 + outcome.moment);
    return outcome;
}

double series_approx_accept(double p) {
    if (!(p >= 0.0) || p > 0.75) {
        throw std::domain_error("p must lie in [0, 3/4], got " + std::to_string(p));
    }
    return 1.0 - (16.0 / 3.0) * p + (224.0 / 9.0) * p * p;
}

int parity_sign(std::span<const Pauli, 8> errors) {
    int sign = 1;
    for (Pauli e : errors) {
        if (has_z_component(e)) {
            sign = -sign;
        }
    }
    return sign;
}

double exhaustive_parity_accept(const DepolarizingRates& rates) {
    validate(rates);

    // per-qubit weights for (I, X, Y, Z), qubit order A_1..A_4, B_1..B_4
    double weight[8][4];
    for (int q = 0; q < 8; ++q) {
        const double p = q < 4 ? rates.copy_a[q] : rates.copy_b[q - 4];
        weight[q][0] = 1.0 - p;
        weight[q][1] = p / 3.0;
        weight[q][2] = p / 3.0;
        weight[q][3] = p / 3.0;
    }

    // Neumaier-compensated sum; 65536 positive terms must land within
    // 1e-12 of the closed form.
    double sum = 0.0;
    double compensation = 0.0;
    for (std::uint32_t pattern = 0; pattern < (1u << 16); ++pattern) {
        double w = 1.0;
        int sign = 1;
        std::uint32_t bits = pattern;
        for (int q = 0; q < 8; ++q) {
            const std::uint32_t pauli = bits & 3u;
            bits >>= 2;
            w *= weight[q][pauli];
            if (pauli >= 2) {  // Y or Z: flips the recorded parity
                sign = -sign;
            }
        }
        if (sign > 0) {
            const double t = sum + w;
            if (std::abs(sum) >= std::abs(w)) {
                compensation += (sum - t) + w;
            } else {
                compensation += (w - t) + sum;
            }
            sum = t;
        }
    }
    return sum + compensation;
}

std::pair<Pauli, Pauli> cnot_conjugate(Pauli on_control, Pauli on_target) {
    const bool xc = has_x_component(on_control);
    const bool zc = has_z_component(on_control);
    const bool xt = has_x_component(on_target);
    const bool zt = has_z_component(on_target);
    // X on the control copies onto the target; Z on the target copies onto
    // the control; the original components stay put.
    return {pauli_from_components(xc, zc != zt), pauli_from_components(xt != xc, zt)};
}

std::pair<Pauli, Pauli> teleported_cnot_error_map(Pauli bell_error) {
    return {pauli_from_components(false, has_z_component(bell_error)),
            pauli_from_components(has_x_component(bell_error), false)};
}

}  // namespace entcost
