#include "entcost/code_geometry.h"

#include <stdexcept>
#include <string>

namespace entcost {

namespace {

void require_positive(int d) {
    if (d < 1) {
        throw std::invalid_argument("code distance d must be >= 1, got " + std::to_string(d));
    }
}

}  // namespace

CodeCounts toric_counts(int d) {
    require_positive(d);
    const std::uint64_t dd = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d);
    CodeCounts counts;
    counts.data_qubits = 2 * dd;
    counts.logical_qubits = 2;
    counts.x_stabilizers = dd;
    counts.z_stabilizers = dd;
    // one generator of each type is redundant (global product constraints)
    counts.independent_checks = 2 * dd - 2;
    return counts;
}

CodeCounts planar_counts(int d) {
    require_positive(d);
    if (d % 2 == 0) {
        throw std::domain_error("rotated planar layout requires odd distance, got d = " + std::to_string(d));
    }
    const std::uint64_t dd = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d);
    CodeCounts counts;
    counts.data_qubits = dd;
    counts.logical_qubits = 1;
    counts.x_stabilizers = (dd - 1) / 2;
    counts.z_stabilizers = (dd - 1) / 2;
    counts.independent_checks = dd - 1;
    return counts;
}

std::uint64_t seam_qubit_count(int d) {
    require_positive(d);
    return 2 * static_cast<std::uint64_t>(d) - 1;
}

}  // namespace entcost
