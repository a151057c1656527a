#pragma once

#include <string>
#include <vector>

#include "brst/fock_space.hpp"
#include "brst/structure_constants.hpp"

namespace brst {

struct ToleranceSettings {
    double load = 1e-12;        // structure-constant validation
    double identity = 1e-10;    // operator identity checks (scaled by dimension)
    double rank_rel = 1e-9;     // relative singular value cutoff
    double nilpotency = 1e-12;  // quantum charge square (scaled by dimension)
};

/// A finite constraint system: ghost count, constraint matrices on V, the
/// structure constants they close on, and the V inner product.
struct ConstraintSystem {
    int m = 0;
    int dim_v = 0;
    std::vector<Matrix> g_matrices;
    StructureConstants structure{1};
    Matrix inner_product;  // Hermitian positive definite, identity by default
    ToleranceSettings tolerances;
};

/// Parses and validates a system description in the documented JSON schema.
/// Every violated invariant is collected and reported through config_error,
/// not just the first.
ConstraintSystem parse_system(const std::string& json_text);

/// parse_system on the contents of a file; the file's bytes also feed the
/// report digest.
ConstraintSystem load_system(const std::string& path);

/// FNV-1a hash of the raw input bytes, as a fixed-width hex string.
std::string digest_bytes(const std::string& bytes);

}  // namespace brst
