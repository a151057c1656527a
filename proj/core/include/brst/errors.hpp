#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace brst {

/// Invalid input system: bad file, bad schema, or violated load-time
/// invariants. Carries the full list of violations, not just the first.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg,
                          std::vector<std::string> violations = {})
        : std::runtime_error(msg), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// A certified property failed on a valid input: this is a finding about the
/// supplied system, not a usage error.
class theorem_violation : public std::runtime_error {
public:
    explicit theorem_violation(const std::string& msg, double residual = 0.0)
        : std::runtime_error(msg), residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_ = 0.0;
};

/// Failure inside the charge construction (rank overflow, homotopy applied
/// outside its domain, internal consistency check tripped).
class construction_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace brst
