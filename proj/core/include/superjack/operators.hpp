#pragma once

#include <optional>

#include "superjack/deformed.hpp"

namespace superjack {

// Exact quotient p / (x_i - x_j); throws errc::nonzero_remainder when the
// division does not come out even (evidence that the input lacked the
// symmetry or quasi-invariance the calling operator relies on).
MPoly divided_difference(const MPoly& p, int i, int j);

// Dunkl operator in direction i on the plain N-variable ring (m = 0 layout).
MPoly dunkl_apply(const MPoly& p, int i);

// Res f(D_1, ..., D_N) on symmetric p; f is read in the power-sum basis.
MPoly symmetric_integral_apply(const SymFunc& f, const MPoly& p);

// All order-r deformed partials at once (the recursion reuses every
// direction of the previous level).
std::vector<MPoly> deformed_partials(const MPoly& p, int r);
MPoly deformed_partial_apply(const MPoly& p, int i, int r);

// L^{(r)} = sum_i (-theta)^{-p(i)} partial_i^{(r)}
MPoly deformed_integral_apply(const MPoly& p, int r);

// L_{phi(f)} = psi^{-1}(phi(f)): per power-sum term of f, the integrals of
// the parts composed in sequence.
MPoly quantum_integral_apply(const SymFunc& f, const MPoly& p);

// Trigonometric integrals: first-order operator x_i d/dx_i and the
// (x_i+x_j)/(x_i-x_j) difference term in the recursion.
std::vector<MPoly> trig_partials(const MPoly& p, int r);
MPoly trig_integral_apply(const MPoly& p, int r);

// The scalar c with trig r-integral of SP_lambda = c SP_lambda; verified on
// every term, errc::not_an_eigenfunction otherwise.
ThetaFunction trig_eigenvalue(const Partition& lambda, int r, int n, int m);

enum class ExpSign { minus, plus };

// Truncated exponential of -+ L_{n,m}/2; L lowers degree by 2, so the sum
// stops at floor(deg/2).
MPoly exp_half_L(const MPoly& p, ExpSign sign);

// SH_lambda = exp(-L/2) SP_lambda
MPoly super_hermite(const Partition& lambda, int n, int m);

enum class HarmonicMode { conjugation, commutator };

// Harmonic integrals: conjugation computes exp(-L/2) o trig o exp(+L/2);
// commutator evaluates the finite nested-commutator sum directly. The two
// must agree.
MPoly harmonic_integral_apply(const MPoly& p, int r, HarmonicMode mode);

// A single operator application described as data; used by the CLI.
struct OperatorRequest {
    enum class Kind {
        dunkl,
        symmetric_integral,
        deformed_rational,
        deformed_trig,
        deformed_harmonic,
        exp_half_L,
    };
    Kind kind = Kind::deformed_rational;
    int order = 1;                 // r for the integral kinds
    int index = 0;                 // Dunkl direction
    std::optional<SymFunc> datum;  // symmetric-function argument when given
    ExpSign sign = ExpSign::minus;
    HarmonicMode mode = HarmonicMode::conjugation;
};

MPoly apply_operator(const OperatorRequest& req, const MPoly& p);

}  // namespace superjack
