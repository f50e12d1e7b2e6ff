// cloner_zoo.hpp
// Closed-form fidelities of the standard comparison cloners in dimension d.

#pragma once

#include <cmath>
#include <stdexcept>

#include "pcclone/phase_covariant.hpp"

namespace pcclone {

enum class ClonerKind { Universal, Real, MutuallyUnbiased, PhaseCovariant };

inline double comparison_fidelity(ClonerKind kind, int d) {
    check_dim(d);
    switch (kind) {
        case ClonerKind::Universal:
            return (d + 3.0) / (2.0 * (d + 1.0));
        case ClonerKind::MutuallyUnbiased:
            return 0.5 * (1.0 + 1.0 / std::sqrt(static_cast<double>(d)));
        case ClonerKind::Real:
            return 0.5 +
                   (std::sqrt(d * d + 4.0 * d + 20.0) - d + 2.0) /
                       (4.0 * (d + 2.0));
        case ClonerKind::PhaseCovariant:
            return optimal_symmetric(d).first;
    }
    throw std::domain_error("unknown cloner kind");
}

}  // namespace pcclone
