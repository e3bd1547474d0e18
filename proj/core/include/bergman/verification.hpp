#pragma once

#include <string>
#include <vector>

namespace bergman::verification {

/// Outcome of one verification criterion, with the observed quantities and
/// pinned bounds folded into the detail line.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full desk-scale verification battery (ten criteria: closed-form
/// multipliers, limit laws, scaled differences, bounded variation, sequence
/// limits, kernel closed form, the projection identity, projector properties,
/// partial-sum convergence, and empirical projection-norm bounds).
std::vector<CriterionResult> run_verification_suite();

/// {"criteria": [...], "all_pass": bool}
std::string to_json(const std::vector<CriterionResult>& results);

bool all_pass(const std::vector<CriterionResult>& results);

} // namespace bergman::verification
