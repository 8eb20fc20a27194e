#pragma once

#include <string>
#include <vector>

namespace relnodes {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;               // populated on failure (first mismatch)
    std::vector<std::string> flags;   // known table-vs-formula discrepancies
};

// Golden-table and cross-oracle checks shared by the CLI verifier and the
// acceptance suite.
CheckResult check_template_table();
CheckResult check_ext_template_table();
CheckResult check_appendix(int delta);  // delta 0..3
// severi_degree_enum vs evaluate_relative_severi on every (alpha, beta) with
// sum i (alpha_i + beta_i) <= max_degree and |beta| >= delta.
CheckResult check_dual_path(int delta, int max_degree, int jobs = 1);
CheckResult check_classical_specializations();
CheckResult check_r_expansion(int max_delta);
CheckResult check_leading_terms(int max_delta, int node_poly_cap);

// The bundle cmd_verify runs: table reproduction, appendix goldens up to
// min(delta, 3), the dual-path grid, classical values, R coefficients and
// leading terms up to delta.
std::vector<CheckResult> run_verification(int delta, int max_degree, int jobs = 1);

}  // namespace relnodes
