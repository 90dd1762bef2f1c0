#pragma once

#include <string>
#include <utility>
#include <vector>

#include "superjack/operators.hpp"

namespace superjack {

struct GramReport {
    int n = 0;
    int m = 0;
    int degree = 0;
    std::vector<Partition> labels;
    std::vector<std::vector<ThetaFunction>> matrix;
    std::vector<ThetaFunction> expected_diagonal;
    bool diagonal = false;          // off-diagonal entries all vanish
    bool matches_expected = false;  // diagonal equals the closed formula
    bool pass = false;
    std::string family = "superjack";
    std::string provenance;
};

// (f, g) = (L_f phi(g))(0). Both arguments are Lambda-representatives; the
// value only depends on their classes modulo the kernel of phi.
ThetaFunction bilinear_form(const SymFunc& f, const SymFunc& g, int n, int m);

// Gram matrix of the P_lambda representatives over H_{n,m} at weight d, with
// the expected diagonal pochhammer_gen(theta n - m, lambda) / b_lambda.
GramReport gram_matrix(int n, int m, int d);

// Adding a kernel-labelled Jack function to either argument must not move
// the form. Requires kernel_lambda outside H_{n,m}.
bool representative_independence_check(const SymFunc& f, const Partition& kernel_lambda, const SymFunc& g,
                                       int n, int m);

// Degree-d component of the reproducing kernel: labels with weights
// 1 / (|lambda|! SC_lambda(1^{n+m})).
struct KernelComponent {
    int n = 0;
    int m = 0;
    int d = 0;
    std::vector<std::pair<Partition, ThetaFunction>> entries;
};
KernelComponent sf_component(int n, int m, int d);

// Pairs SC_mu against the degree-|mu| kernel component; the result must
// reproduce SC_mu exactly as a polynomial in the second variable pair.
bool reproducing_check(const Partition& mu, int n, int m);

// The generating expansion of exp(-L/2) against the form reproduces SH_lambda
// from SP_lambda for every |lambda| <= dmax.
bool hermite_generating_check(int n, int m, int dmax);

// Gram data for the SH_lambda, carried over from the SP Gram matrix through
// the isometry of exp(-L/2); no integration is involved.
GramReport hermite_gram(int n, int m, int d);

}  // namespace superjack
