#pragma once

#include <optional>

#include "superjack/mpoly.hpp"
#include "superjack/symfunc.hpp"

namespace superjack {

// Element of Lambda_{n,m} carrying, when known, a symmetric-function preimage
// under phi (needed by the quantum-integral machinery).
struct SuperElement {
    MPoly poly;
    std::optional<SymFunc> representative;  // power-sum basis when present
    // set when the label lay outside the fat hook, so the image is expected
    // to be in the kernel of phi
    bool outside_fat_hook = false;
};

// Deformed power sum p_{r,theta}(x, y) = sum_i x_i^r - (1/theta) sum_j y_j^r.
MPoly deformed_power_sum(int r, int n, int m);

// The homomorphism p_r -> p_{r,theta} applied to f.
SuperElement phi(const SymFunc& f, int n, int m);

// phi(P_lambda); memoized, the reference stays valid until
// clear_super_jack_memo(). Computed for every label, so the kernel statement
// stays testable in both directions.
const SuperElement& super_jack(const Partition& lambda, int n, int m);
void clear_super_jack_memo();

// kaneko_scale(lambda) * super_jack(lambda)
SuperElement super_C(const Partition& lambda, int n, int m);

// True iff (d/dx_i + theta d/dy_j) p vanishes identically on x_i = y_j.
// Indices are 0-based within their blocks.
bool quasi_invariance_check(const MPoly& p, int i, int j);

ThetaFunction evaluate_at_ones(const MPoly& p);

// Compares SP_lambda(1^{n+m}) with the specialisation formula at X = n - m/theta.
bool eval_ones_check(const Partition& lambda, int n, int m);

// Numeric growth bound on |SP_lambda| over random complex points.
struct BoundReport {
    bool pass = true;
    double worst_ratio = 0.0;  // max |SP| / bound over the sample
    int points = 0;
};
BoundReport bound_check(const Partition& lambda, int n, int m, const Rational& theta_value,
                        int npoints, std::uint64_t seed);

}  // namespace superjack
