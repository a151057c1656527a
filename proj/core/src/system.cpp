#include "brst/system.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "brst/errors.hpp"
#include "json.hpp"

namespace brst {

namespace {

using nlohmann::json;

cplx parse_complex(const json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return cplx(j[0].get<double>(), j[1].get<double>());
    }
    throw config_error("complex entries must be numbers or [re, im] pairs");
}

Matrix parse_matrix(const json& j, int rows, int cols, const std::string& what,
                    std::vector<std::string>& violations) {
    Matrix out = Matrix::Zero(rows, cols);
    if (!j.is_array() || static_cast<int>(j.size()) != rows) {
        violations.push_back(what + ": expected " + std::to_string(rows) + " rows");
        return out;
    }
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) {
            violations.push_back(what + ": row " + std::to_string(r) + " must have " +
                                 std::to_string(cols) + " entries");
            return out;
        }
        for (int c = 0; c < cols; ++c) out(r, c) = parse_complex(j[r][c]);
    }
    return out;
}

}  // namespace

ConstraintSystem parse_system(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("system file is not valid JSON: ") + e.what());
    }

    std::vector<std::string> violations;
    char buf[160];

    ConstraintSystem sys;
    if (!j.contains("m") || !j["m"].is_number_integer() || j["m"].get<int>() < 1) {
        throw config_error("field \"m\" must be a positive integer");
    }
    if (!j.contains("dim_V") || !j["dim_V"].is_number_integer() ||
        j["dim_V"].get<int>() < 1) {
        throw config_error("field \"dim_V\" must be a positive integer");
    }
    sys.m = j["m"].get<int>();
    sys.dim_v = j["dim_V"].get<int>();
    if (sys.m > MultiIndex::max_ghosts) {
        throw config_error("m exceeds the supported ghost count of " +
                           std::to_string(MultiIndex::max_ghosts));
    }

    if (j.contains("tolerances")) {
        const json& t = j["tolerances"];
        if (t.contains("load")) sys.tolerances.load = t["load"].get<double>();
        if (t.contains("identity")) sys.tolerances.identity = t["identity"].get<double>();
        if (t.contains("rank")) sys.tolerances.rank_rel = t["rank"].get<double>();
        if (t.contains("nilpotency")) {
            sys.tolerances.nilpotency = t["nilpotency"].get<double>();
        }
    }

    if (!j.contains("G_matrices") || !j["G_matrices"].is_array() ||
        static_cast<int>(j["G_matrices"].size()) != sys.m) {
        violations.push_back("G_matrices: expected exactly m = " + std::to_string(sys.m) +
                             " matrices");
    } else {
        for (int a = 0; a < sys.m; ++a) {
            sys.g_matrices.push_back(parse_matrix(j["G_matrices"][a], sys.dim_v,
                                                  sys.dim_v,
                                                  "G_matrices[" + std::to_string(a) + "]",
                                                  violations));
        }
    }

    sys.inner_product = Matrix::Identity(sys.dim_v, sys.dim_v);
    if (j.contains("inner_product")) {
        sys.inner_product = parse_matrix(j["inner_product"], sys.dim_v, sys.dim_v,
                                         "inner_product", violations);
    }

    sys.structure = StructureConstants(sys.m);
    if (j.contains("structure_constants")) {
        if (!j["structure_constants"].is_array()) {
            violations.push_back("structure_constants: expected a list of entries");
        } else {
            std::set<std::tuple<int, int, int>> seen;
            for (const json& entry : j["structure_constants"]) {
                if (!entry.contains("a") || !entry.contains("b") || !entry.contains("c") ||
                    !entry.contains("value")) {
                    violations.push_back(
                        "structure_constants: entries need fields a, b, c, value");
                    continue;
                }
                const int a = entry["a"].get<int>();
                const int b = entry["b"].get<int>();
                const int c = entry["c"].get<int>();
                if (a < 1 || a > sys.m || b < 1 || b > sys.m || c < 1 || c > sys.m) {
                    std::snprintf(buf, sizeof(buf),
                                  "structure_constants: index out of range at "
                                  "(a=%d,b=%d,c=%d)",
                                  a, b, c);
                    violations.emplace_back(buf);
                    continue;
                }
                if (!seen.insert({a, b, c}).second) {
                    std::snprintf(buf, sizeof(buf),
                                  "structure_constants: duplicate entry (a=%d,b=%d,c=%d)",
                                  a, b, c);
                    violations.emplace_back(buf);
                    continue;
                }
                sys.structure.set(a, b, c, entry["value"].get<double>());
            }
        }
    }

    for (const std::string& v : sys.structure.validate(sys.tolerances.load)) {
        violations.push_back("structure_constants: " + v);
    }

    // Hermiticity of each constraint matrix for the configured inner product.
    if (static_cast<int>(sys.g_matrices.size()) == sys.m) {
        for (int a = 0; a < sys.m; ++a) {
            const Matrix sg = sys.inner_product * sys.g_matrices[static_cast<std::size_t>(a)];
            const double residual = sg.size() > 0
                                        ? (sg - Matrix(sg.adjoint())).cwiseAbs().maxCoeff()
                                        : 0.0;
            if (residual > sys.tolerances.identity * sys.dim_v) {
                std::snprintf(buf, sizeof(buf),
                              "G_matrices[%d]: not self-adjoint, max asymmetry %.3g", a,
                              residual);
                violations.emplace_back(buf);
            }
        }
    }

    // Inner product: Hermitian and positive definite.
    {
        const double herm =
            (sys.inner_product - Matrix(sys.inner_product.adjoint())).cwiseAbs().maxCoeff();
        if (herm > sys.tolerances.identity * sys.dim_v) {
            std::snprintf(buf, sizeof(buf), "inner_product: not Hermitian, residual %.3g",
                          herm);
            violations.emplace_back(buf);
        } else {
            Eigen::SelfAdjointEigenSolver<Matrix> eig(sys.inner_product);
            if (eig.eigenvalues().minCoeff() <= 0.0) {
                std::snprintf(buf, sizeof(buf),
                              "inner_product: not positive definite, smallest eigenvalue "
                              "%.3g",
                              eig.eigenvalues().minCoeff());
                violations.emplace_back(buf);
            }
        }
    }

    if (!violations.empty()) {
        throw config_error("invalid constraint system (" +
                               std::to_string(violations.size()) + " violations)",
                           std::move(violations));
    }
    return sys;
}

ConstraintSystem load_system(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open system file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_system(buffer.str());
}

std::string digest_bytes(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace brst
