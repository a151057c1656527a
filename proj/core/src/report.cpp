#include <cstdio>
#include <sstream>

#include "brst/pipeline.hpp"
#include "json.hpp"

namespace brst {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

}  // namespace

std::string report_json(const PipelineResult& r) {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = command_name(r.command);
    j["system_digest"] = r.digest;

    ordered_json results = ordered_json::object();
    ordered_json residuals = ordered_json::object();
    ordered_json verdicts = ordered_json::object();

    if (r.check) {
        const CheckStage& c = *r.check;
        results["check"] = {{"m", c.m},
                            {"dim_V", c.dim_v},
                            {"total_dim", c.total_dim},
                            {"structure_nonzeros", c.structure_nonzeros}};
        residuals["check"] = {{"hermiticity", c.hermiticity_residual},
                              {"commutator_closure", c.commutator_residual},
                              {"inner_product_min_eigenvalue", c.inner_product_min_eig}};
        verdicts["input_valid"] = "PASS";  // load_system rejects invalid systems
    }
    if (r.brst) {
        const BrstStage& b = *r.brst;
        results["brst"] = {{"pieces", b.pieces}, {"rank", b.rank}};
        residuals["brst"] = {{"classical_bracket_max_coeff", b.bracket_max_coeff}};
        verdicts["classical_nilpotency"] = verdict(b.nilpotent);
        verdicts["classical_reality"] = verdict(b.real);
    }
    if (r.quantize) {
        const QuantizeStage& q = *r.quantize;
        ordered_json spectrum = ordered_json::array();
        for (const auto& [label, mult] : q.ghost_spectrum) {
            spectrum.push_back({{"ghost_number", label}, {"multiplicity", mult}});
        }
        results["quantize"] = {{"ghost_spectrum", spectrum}};
        residuals["quantize"] = {{"omega_squared", q.omega_sq_residual},
                                 {"omega_adjoint", q.omega_adjoint_residual},
                                 {"block_structure", q.block_residual},
                                 {"ghost_spectrum", q.ghost_spectrum_residual},
                                 {"ghost_adjoint", q.ghost_adjoint_residual}};
        verdicts["quantum_nilpotency"] = verdict(q.nilpotent);
        verdicts["quantum_self_adjoint"] = verdict(q.self_adjoint);
        verdicts["ghost_spectrum"] = verdict(q.spectrum_ok);
    }
    if (r.cohomology) {
        const CohomologyStage& c = *r.cohomology;
        ordered_json dims = ordered_json::object();
        for (const auto& [label, dim] : c.dims) dims[label] = dim;
        results["cohomology"] = {{"dims", dims},
                                 {"joint_kernel_dim", c.joint_kernel},
                                 {"lambda_rank", c.duality.lambda_rank},
                                 {"bottom_dim", c.duality.kernel_dim},
                                 {"top_dim", c.duality.cokernel_dim}};
        residuals["cohomology"] = {{"lambda_smallest_sv", c.duality.smallest_kept_sv}};
        verdicts["duality"] = verdict(c.duality.pass);
        verdicts["kernel_dimension"] = verdict(c.kernel_matches);
    }
    if (r.extended) {
        const ExtendedStage& e = *r.extended;
        results["extended"] = {{"sphere_dims", e.sphere_dims},
                               {"sphere_cohomology", e.sphere_homology},
                               {"H0_dim", e.zero.h0_dim},
                               {"bottom_dim", e.zero.bottom_dim},
                               {"top_dim", e.zero.top_dim}};
        residuals["extended"] = {{"representative_closed", e.zero.rep_closed_residual},
                                 {"branch_differential", e.zero.branch_d_residual},
                                 {"branch_eta", e.zero.branch_eta_residual}};
        verdicts["extended_sum"] = verdict(e.zero.sum_matches);
        verdicts["extended_representatives"] = verdict(e.zero.reps_span);
        verdicts["extended_branch"] = verdict(e.zero.pass);
    }

    j["results"] = results;
    j["residuals"] = residuals;
    j["verdicts"] = verdicts;
    j["tolerances"] = {{"load", r.tolerances.load},
                       {"identity", r.tolerances.identity},
                       {"rank", r.tolerances.rank_rel},
                       {"nilpotency", r.tolerances.nilpotency}};
    return j.dump(2) + "\n";
}

std::string report_text(const PipelineResult& r) {
    std::ostringstream out;
    out << "command: " << command_name(r.command) << "\n";
    out << "system digest: " << r.digest << "\n";
    if (r.check) {
        const CheckStage& c = *r.check;
        out << "[check] m=" << c.m << " dim_V=" << c.dim_v
            << " total_dim=" << c.total_dim
            << " structure_nonzeros=" << c.structure_nonzeros << "\n";
        out << "  hermiticity residual:        " << fmt(c.hermiticity_residual) << "\n";
        out << "  commutator closure residual: " << fmt(c.commutator_residual) << "\n";
        out << "  inner product min eigenvalue: " << fmt(c.inner_product_min_eig) << "\n";
        out << "  input invariants: PASS\n";
    }
    if (r.brst) {
        const BrstStage& b = *r.brst;
        out << "[brst] rank " << b.rank << "\n";
        for (std::size_t p = 0; p < b.pieces.size(); ++p) {
            out << "  Omega(" << p << ") = " << b.pieces[p] << "\n";
        }
        out << "  classical nilpotency: " << verdict(b.nilpotent)
            << " (max residual coefficient " << fmt(b.bracket_max_coeff) << ")\n";
        out << "  reality: " << verdict(b.real) << "\n";
    }
    if (r.quantize) {
        const QuantizeStage& q = *r.quantize;
        out << "[quantize]\n";
        out << "  |Omega^2|:            " << fmt(q.omega_sq_residual) << "  "
            << verdict(q.nilpotent) << "\n";
        out << "  |Omega - adjoint|:    " << fmt(q.omega_adjoint_residual) << "  "
            << verdict(q.self_adjoint) << "\n";
        out << "  grading blocks:       " << fmt(q.block_residual) << "\n";
        out << "  ghost spectrum:";
        for (const auto& [label, mult] : q.ghost_spectrum) {
            out << "  " << label << " x" << mult;
        }
        out << "  " << verdict(q.spectrum_ok) << "\n";
        out << "  ghost operator skew-adjointness residual: "
            << fmt(q.ghost_adjoint_residual) << "\n";
    }
    if (r.cohomology) {
        const CohomologyStage& c = *r.cohomology;
        out << "[cohomology]";
        for (const auto& [label, dim] : c.dims) {
            out << "  H^{" << label << "}: " << dim;
        }
        out << "\n";
        out << "  joint kernel dim: " << c.joint_kernel << "  "
            << verdict(c.kernel_matches) << "\n";
        out << "  duality: bottom " << c.duality.kernel_dim << ", top "
            << c.duality.cokernel_dim << ", lambda rank " << c.duality.lambda_rank
            << "  " << verdict(c.duality.pass) << "\n";
    }
    if (r.extended) {
        const ExtendedStage& e = *r.extended;
        out << "[extended] sphere dims";
        for (int d : e.sphere_dims) out << " " << d;
        out << ", sphere cohomology";
        for (int h : e.sphere_homology) out << " " << h;
        out << "\n";
        out << "  dim H0(extended) = " << e.zero.h0_dim << ", bottom+top = "
            << (e.zero.bottom_dim + e.zero.top_dim) << "  "
            << verdict(e.zero.sum_matches) << "\n";
        out << "  branch annihilation residuals: d " << fmt(e.zero.branch_d_residual)
            << ", eta " << fmt(e.zero.branch_eta_residual) << "  "
            << verdict(e.zero.pass) << "\n";
    }
    return out.str();
}

}  // namespace brst
