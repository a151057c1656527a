#pragma once

#include "brst/cochain_complex.hpp"
#include "brst/koszul.hpp"
#include "brst/quantize.hpp"

namespace brst {

/// Measured certificates for the assembled charge operator.
struct BrstCertificates {
    double nilpotency_residual = 0.0;    // max |Omega^2| entry
    double self_adjoint_residual = 0.0;  // max |Omega - adjoint(Omega)| entry
    double block_residual = 0.0;         // off-grading leakage
    int worst_sector = -1;               // source sector where |Omega^2| peaks
};

struct QuantumBrst {
    GradedOperator op;
    BrstCertificates cert;
};

/// Quantizes the charge piecewise and certifies nilpotency and
/// self-adjointness by direct matrix computation. A nilpotency residual
/// above `tol` (scaled by the dimension) raises theorem_violation carrying
/// the residual and the ghost sector where it concentrates.
QuantumBrst quantum_brst(const BRSTCharge& charge, const GeneratorOps& ops,
                         double tol = 1e-12);

/// The graded complex of a ghost-degree +1 operator: sector dimensions,
/// superdiagonal blocks as differentials, ghost-number labels.
CochainComplex ghost_complex(const GradedOperator& omega, const FockSpace& space);

}  // namespace brst
