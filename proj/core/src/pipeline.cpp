#include "brst/pipeline.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

#include "brst/errors.hpp"

namespace brst {

Command parse_command(const std::string& name) {
    if (name == "check") return Command::check;
    if (name == "brst") return Command::brst;
    if (name == "quantize") return Command::quantize;
    if (name == "cohomology") return Command::cohomology;
    if (name == "extended") return Command::extended;
    if (name == "all") return Command::all;
    throw config_error("unknown command: " + name);
}

std::string command_name(Command cmd) {
    switch (cmd) {
        case Command::check: return "check";
        case Command::brst: return "brst";
        case Command::quantize: return "quantize";
        case Command::cohomology: return "cohomology";
        case Command::extended: return "extended";
        case Command::all: return "all";
    }
    return "?";
}

bool PipelineResult::all_pass() const {
    if (brst && !(brst->nilpotent && brst->real)) return false;
    if (quantize && !(quantize->nilpotent && quantize->self_adjoint &&
                      quantize->spectrum_ok)) {
        return false;
    }
    if (cohomology && !(cohomology->duality.pass && cohomology->kernel_matches)) {
        return false;
    }
    if (extended && !extended->zero.pass) return false;
    return true;
}

namespace {

std::string ghost_number_label(int s, int m) {
    const int num = 2 * s - m;
    if (num % 2 == 0) return std::to_string(num / 2);
    return std::to_string(num) + "/2";
}

CheckStage run_check(const ConstraintSystem& sys) {
    CheckStage stage;
    stage.m = sys.m;
    stage.dim_v = sys.dim_v;
    stage.total_dim = (1 << sys.m) * sys.dim_v;
    for (int a = 1; a <= sys.m; ++a) {
        for (int b = 1; b <= sys.m; ++b) {
            for (int c = 1; c <= sys.m; ++c) {
                if (sys.structure.get(a, b, c) != 0.0) ++stage.structure_nonzeros;
            }
        }
    }
    const cplx i_unit(0.0, 1.0);
    for (int a = 0; a < sys.m; ++a) {
        const Matrix sg = sys.inner_product * sys.g_matrices[static_cast<std::size_t>(a)];
        stage.hermiticity_residual =
            std::max(stage.hermiticity_residual, max_abs(sg - Matrix(sg.adjoint())));
    }
    for (int a = 1; a <= sys.m; ++a) {
        for (int b = a + 1; b <= sys.m; ++b) {
            Matrix closure = sys.g_matrices[static_cast<std::size_t>(a - 1)] *
                                 sys.g_matrices[static_cast<std::size_t>(b - 1)] -
                             sys.g_matrices[static_cast<std::size_t>(b - 1)] *
                                 sys.g_matrices[static_cast<std::size_t>(a - 1)];
            for (int c = 1; c <= sys.m; ++c) {
                closure += i_unit * sys.structure.get(a, b, c) *
                           sys.g_matrices[static_cast<std::size_t>(c - 1)];
            }
            stage.commutator_residual = std::max(stage.commutator_residual, max_abs(closure));
        }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(sys.inner_product);
    stage.inner_product_min_eig = eig.eigenvalues().minCoeff();
    return stage;
}

BrstStage run_brst(const BRSTCharge& charge, const ConstraintSystem& sys) {
    BrstStage stage;
    for (const Observable& piece : charge.pieces) stage.pieces.push_back(piece.str());
    stage.rank = static_cast<int>(charge.pieces.size()) - 1;
    const Observable total = charge.total();
    const Observable bracket = poisson(total, total, sys.structure);
    stage.nilpotent = bracket.is_zero();
    stage.bracket_max_coeff = bracket.max_abs_coefficient();
    stage.real = is_real(total);
    return stage;
}

QuantizeStage run_quantize(const QuantumBrst& quantum, const GeneratorOps& ops,
                           const ConstraintSystem& sys) {
    QuantizeStage stage;
    stage.omega_sq_residual = quantum.cert.nilpotency_residual;
    stage.omega_adjoint_residual = quantum.cert.self_adjoint_residual;
    stage.block_residual = quantum.cert.block_residual;
    stage.nilpotent =
        stage.omega_sq_residual <= sys.tolerances.nilpotency * ops.space().total_dim();
    stage.self_adjoint =
        stage.omega_adjoint_residual <= sys.tolerances.identity * ops.space().total_dim();

    const FockSpace& space = ops.space();
    const GradedOperator g = ghost_number_op(space);
    Matrix expected = Matrix::Zero(space.total_dim(), space.total_dim());
    for (int s = 0; s <= space.ghost_count(); ++s) {
        const double value = s - space.ghost_count() / 2.0;
        for (int k = 0; k < space.sector_dim(s); ++k) {
            const int idx = space.sector_offset(s) + k;
            expected(idx, idx) = value;
        }
        stage.ghost_spectrum.emplace_back(ghost_number_label(s, space.ghost_count()),
                                          space.sector_dim(s));
    }
    stage.ghost_spectrum_residual = max_abs(g.mat - expected);
    stage.spectrum_ok =
        stage.ghost_spectrum_residual <= sys.tolerances.identity * space.total_dim();
    stage.ghost_adjoint_residual = max_abs(adjoint(g, space).mat + g.mat);
    return stage;
}

CohomologyStage run_cohomology(const QuantumBrst& quantum, const GeneratorOps& ops,
                               const ConstraintSystem& sys) {
    CohomologyStage stage;
    const FockSpace& space = ops.space();
    const CochainComplex complex = ghost_complex(quantum.op, space);
    const CohomologyReport report = cohomology(complex, sys.tolerances.rank_rel);
    for (std::size_t k = 0; k < report.degrees.size(); ++k) {
        stage.dims.emplace_back(report.degrees[k].label, report.degrees[k].homology_dim);
    }
    stage.joint_kernel = joint_kernel_dim(sys.g_matrices, sys.tolerances.rank_rel);
    stage.kernel_matches = report.degrees.front().homology_dim == stage.joint_kernel;
    stage.duality = duality_check(quantum.op, space, sys.tolerances.rank_rel);
    return stage;
}

ExtendedStage run_extended(const QuantumBrst& quantum, const GeneratorOps& ops,
                           const ConstraintSystem& sys) {
    ExtendedStage stage;
    const FockSpace& space = ops.space();
    const CochainComplex charge_complex = ghost_complex(quantum.op, space);
    const CochainComplex sphere = sphere_complex(space.ghost_count());
    stage.sphere_dims = sphere.dims;
    stage.sphere_homology = cohomology(sphere, sys.tolerances.rank_rel).homology_dims();
    const ExtendedComplex ext = extended_complex(charge_complex, sphere);
    stage.zero =
        extended_zero_check(ext, charge_complex, sphere, ops, sys.tolerances.rank_rel);
    return stage;
}

}  // namespace

PipelineResult run_command(const ConstraintSystem& sys, Command cmd,
                           const std::string& digest) {
    PipelineResult result;
    result.command = cmd;
    result.digest = digest;
    result.tolerances = sys.tolerances;

    const bool want_check = cmd == Command::check || cmd == Command::all;
    const bool want_brst = cmd == Command::brst || cmd == Command::all;
    const bool want_quantize = cmd == Command::quantize || cmd == Command::all;
    const bool want_cohomology = cmd == Command::cohomology || cmd == Command::all;
    const bool want_extended = cmd == Command::extended || cmd == Command::all;
    const bool need_operator = want_quantize || want_cohomology || want_extended;
    const bool need_charge = want_brst || need_operator;

    if (want_check) result.check = run_check(sys);

    std::optional<BRSTCharge> charge;
    if (need_charge) charge = build_brst(sys.structure);
    if (want_brst) result.brst = run_brst(*charge, sys);

    if (need_operator) {
        OperatorTolerances op_tol;
        op_tol.identity = sys.tolerances.identity;
        GeneratorOps ops(FockSpace(sys.m, sys.dim_v, sys.inner_product), sys.g_matrices,
                         sys.structure, op_tol);
        const QuantumBrst quantum =
            quantum_brst(*charge, ops, sys.tolerances.nilpotency);
        if (want_quantize) result.quantize = run_quantize(quantum, ops, sys);
        if (want_cohomology) result.cohomology = run_cohomology(quantum, ops, sys);
        if (want_extended) result.extended = run_extended(quantum, ops, sys);
    }
    return result;
}

}  // namespace brst
