#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brst/brst_operator.hpp"
#include "brst/extended_complex.hpp"
#include "brst/system.hpp"

namespace brst {

enum class Command { check, brst, quantize, cohomology, extended, all };

Command parse_command(const std::string& name);
std::string command_name(Command cmd);

struct CheckStage {
    int m = 0;
    int dim_v = 0;
    int total_dim = 0;
    int structure_nonzeros = 0;
    double hermiticity_residual = 0.0;
    double commutator_residual = 0.0;
    double inner_product_min_eig = 0.0;
};

struct BrstStage {
    std::vector<std::string> pieces;
    int rank = 0;  // highest antighost number among the pieces
    bool nilpotent = false;
    bool real = false;
    double bracket_max_coeff = 0.0;  // 0 when the bracket vanishes symbolically
};

struct QuantizeStage {
    double omega_sq_residual = 0.0;
    double omega_adjoint_residual = 0.0;
    double block_residual = 0.0;
    std::vector<std::pair<std::string, int>> ghost_spectrum;  // ghost number, multiplicity
    double ghost_spectrum_residual = 0.0;
    double ghost_adjoint_residual = 0.0;  // skew-adjointness of the grading operator
    bool nilpotent = false;
    bool self_adjoint = false;
    bool spectrum_ok = false;
};

struct CohomologyStage {
    std::vector<std::pair<std::string, int>> dims;  // per ghost number
    int joint_kernel = 0;
    bool kernel_matches = false;  // bottom cohomology equals the joint kernel
    DualityReport duality;
};

struct ExtendedStage {
    std::vector<int> sphere_dims;
    std::vector<int> sphere_homology;
    ExtendedZeroReport zero;
};

struct PipelineResult {
    Command command = Command::check;
    std::string digest;
    ToleranceSettings tolerances;
    std::optional<CheckStage> check;
    std::optional<BrstStage> brst;
    std::optional<QuantizeStage> quantize;
    std::optional<CohomologyStage> cohomology;
    std::optional<ExtendedStage> extended;

    bool all_pass() const;
};

/// Runs the requested stages on a validated system. `digest` identifies the
/// input bytes in the report.
PipelineResult run_command(const ConstraintSystem& system, Command cmd,
                           const std::string& digest);

std::string report_json(const PipelineResult& result);
std::string report_text(const PipelineResult& result);

}  // namespace brst
