#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superjack/forms.hpp"

namespace superjack {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // names the first offending instance on failure
};

// Triangularity, pairwise orthogonality, Stanley norms and the
// specialisation formula for all |lambda| <= max_weight.
CheckResult check_jack_sanity(int max_weight);

// sum over |lambda| = k of C_lambda equals p_1^k for k <= max_k.
CheckResult check_kaneko_sum_rule(int max_k);

// phi(P_lambda) = 0 exactly for labels outside the fat hook, both directions.
CheckResult check_kernel_theorem(int n, int m, int max_weight);

// Block symmetry plus the quasi-invariance condition on phi images spanning
// degrees <= max_degree.
CheckResult check_quasi_invariance(int n, int m, int max_degree);

CheckResult check_dunkl_commutativity(int max_vars, int max_degree, std::uint64_t seed);

// Deformed integrals at m = 0 against Res p_r(D) on random symmetric inputs.
CheckResult check_m0_reduction(int nvars, int rmax, int max_degree, std::uint64_t seed);

// L^{(r)} L^{(s)} = L^{(s)} L^{(r)} on super-Jack polynomials.
CheckResult check_integral_commutativity(int n, int m, int rmax, int max_weight);

// Gram matrices diagonal with the closed-formula diagonal for d <= max_degree.
CheckResult check_orthogonality_theorem(int n, int m, int max_degree);

CheckResult check_reproducing(int n, int m, int max_weight);

// The exp(-L/2) intertwining diagram, agreement of the two harmonic modes,
// joint eigenfunction property of the SH family, and the SH Gram data.
CheckResult check_intertwining(int n, int m, int rmax, int max_weight);

CheckResult check_numeric_bound(int n, int m, const std::vector<Rational>& thetas, int max_weight,
                                int npoints, std::uint64_t seed);

// Full battery at caller-chosen scope; used by the CLI verify-all command.
std::vector<CheckResult> verify_suite(int n, int m, int degree);

}  // namespace superjack
