#pragma once

#include <optional>
#include <vector>

#include "brst/fock_space.hpp"
#include "brst/observable.hpp"
#include "brst/structure_constants.hpp"

namespace brst {

/// Complex matrix on the full ghost-extended space, tagged with parity and
/// ghost-degree shift when those are defined.
struct GradedOperator {
    Matrix mat;
    std::optional<int> parity;       // 0 or 1 when parity-homogeneous
    std::optional<int> ghost_shift;  // ghost-degree change when homogeneous
};

double max_abs(const Matrix& m);

/// Entries of `op` outside the blocks allowed by its ghost_shift; zero for a
/// cleanly graded operator.
double block_structure_residual(const GradedOperator& op, const FockSpace& space);

struct OperatorTolerances {
    /// Max-absolute-entry tolerance for operator identity checks, scaled by
    /// the matrix dimension at the point of use.
    double identity = 1e-10;
};

/// Generator operators on a FockSpace for a concrete constraint
/// representation: ghost multiplication, ghost derivative, lifted V
/// operators. Construction validates that each constraint matrix is
/// self-adjoint for the V inner product and that the commutators close on
/// the structure constants; a failed check raises config_error carrying the
/// residual.
class GeneratorOps {
public:
    GeneratorOps(FockSpace space, std::vector<Matrix> constraint_mats,
                 StructureConstants structure, OperatorTolerances tol = {});

    const FockSpace& space() const { return space_; }
    const StructureConstants& structure() const { return structure_; }
    const std::vector<Matrix>& constraint_mats() const { return g_mats_; }

    const GradedOperator& eta(int a) const;  // exterior multiplication
    const GradedOperator& mom(int a) const;  // 1/i times interior derivative

    /// Block-diagonal lift of a V operator across the ghost sectors.
    GradedOperator lift(const Matrix& v_op) const;
    const GradedOperator& constraint(int a) const;  // lifted constraint matrix

    /// Evaluates a coefficient polynomial on the constraint matrices,
    /// mapping each commutative monomial to the symmetrized matrix product.
    Matrix eval_coefficient(const CoefficientPoly& poly) const;

    /// Worst commutator-closure residual max_{a<b} |[G_a,G_b] + i C_ab^c G_c|.
    double consistency_residual() const { return consistency_residual_; }

private:
    FockSpace space_;
    std::vector<Matrix> g_mats_;
    StructureConstants structure_;
    OperatorTolerances tol_;
    std::vector<GradedOperator> eta_ops_;
    std::vector<GradedOperator> mom_ops_;
    std::vector<GradedOperator> lifted_constraints_;
    double consistency_residual_ = 0.0;
};

/// Operator assigned to a classical observable: ghosts act by exterior
/// multiplication on the left, lifted coefficients in the middle, ghost
/// derivatives act first. Linear in the observable.
GradedOperator quantize(const Observable& f, const GeneratorOps& ops);

/// The unique operator B with (A psi, phi) = (psi, B phi) for the
/// top-coefficient scalar product, obtained by solving against the pairing
/// matrix. The residual of the defining identity is checked and a failure
/// raises theorem_violation.
GradedOperator adjoint(const GradedOperator& op, const FockSpace& space,
                       double tol = 1e-10);

/// Closed-form adjoint of a quantized observable: per term
/// (-1)^{|B|} (-1)^{floor(|A|/2)+floor(|B|/2)} P_B f* eta^A, assembled as a
/// matrix product. Must agree with the pairing-solve adjoint.
GradedOperator adjoint_closed_form(const Observable& f, const GeneratorOps& ops);

/// Grading operator (i/2) sum_a (eta_a mom_a - mom_a eta_a); diagonal with
/// eigenvalue s - m/2 on the s-ghost sector and skew-adjoint.
GradedOperator ghost_number_op(const FockSpace& space);

/// AB - (-1)^{parity A * parity B} BA; operands must be parity-homogeneous.
GradedOperator graded_commutator(const GradedOperator& a, const GradedOperator& b);

}  // namespace brst
