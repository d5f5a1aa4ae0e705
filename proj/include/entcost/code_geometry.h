#pragma once

#include <cstdint>

namespace entcost {

// Structural counts for a code at distance d. Only counts are modeled;
// the estimators never need the lattice itself.
struct CodeCounts {
    std::uint64_t data_qubits = 0;
    std::uint64_t logical_qubits = 0;
    std::uint64_t x_stabilizers = 0;
    std::uint64_t z_stabilizers = 0;
    std::uint64_t independent_checks = 0;
};

// Toric code on a d x d periodic lattice: 2d^2 data qubits, d^2 stabilizers
// of each type, two global constraints.
CodeCounts toric_counts(int d);

// Rotated planar surface code, defined for odd d only: d^2 data qubits,
// one logical qubit, d^2 - 1 independent checks.
// Throws std::domain_error for even d (layout mismatch), std::invalid_argument for d < 1.
CodeCounts planar_counts(int d);

// Qubits on one patch boundary: d data + (d-1) syndrome = 2d - 1.
std::uint64_t seam_qubit_count(int d);

}  // namespace entcost
