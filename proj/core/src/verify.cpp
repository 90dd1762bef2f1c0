#include "superjack/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "superjack/error.hpp"

namespace superjack {

namespace {

std::string scope_tag(int n, int m) {
    return "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

std::vector<Partition> labels_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int d = 0; d <= max_weight; ++d)
        for (auto& lambda : enumerate_partitions(d)) out.push_back(std::move(lambda));
    return out;
}

std::vector<Partition> hook_labels_up_to(int n, int m, int max_weight) {
    std::vector<Partition> out;
    for (int d = 0; d <= max_weight; ++d)
        for (auto& lambda : enumerate_partitions(d, n, m)) out.push_back(std::move(lambda));
    return out;
}

MPoly random_mpoly(std::mt19937_64& rng, int n, int m, int max_degree) {
    MPoly p(n, m);
    const int vars = n + m;
    const int nterms = 2 + static_cast<int>(rng() % 4);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> e(vars, 0);
        int budget = static_cast<int>(rng() % (max_degree + 1));
        for (int v = 0; v < vars && budget > 0; ++v) {
            const int k = static_cast<int>(rng() % (budget + 1));
            e[v] = k;
            budget -= k;
        }
        const int c = 1 + static_cast<int>(rng() % 5);
        ThetaFunction coeff(rng() % 2 ? c : -c);
        if (rng() % 3 == 0) coeff *= ThetaFunction::theta();
        p.add_term(e, coeff);
    }
    return p;
}

MPoly symmetrize(const MPoly& p) {
    std::vector<int> perm(p.vars());
    for (int i = 0; i < p.vars(); ++i) perm[i] = i;
    MPoly acc(p.n(), p.m());
    do {
        MPoly q(p.n(), p.m());
        for (const auto& [e, c] : p.terms()) {
            std::vector<int> f(e.size());
            for (std::size_t k = 0; k < e.size(); ++k) f[perm[k]] = e[k];
            q.add_term(f, c);
        }
        acc += q;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

}  // namespace

CheckResult check_jack_sanity(int max_weight) {
    CheckResult res{"jack-sanity", true, ""};
    for (int d = 0; d <= max_weight; ++d) {
        const auto labels = enumerate_partitions(d);
        std::vector<SymFunc> jacks;
        for (const auto& lambda : labels) jacks.push_back(jack(lambda));
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const Partition& lambda = labels[i];
            for (const auto& [mu, c] : jacks[i].terms()) {
                const bool ok = mu == lambda ? c.is_one()
                                             : dominance_compare(mu, lambda) == Dominance::less;
                if (!ok) {
                    res.pass = false;
                    res.detail = "triangularity fails for P_" + to_string(lambda);
                    return res;
                }
            }
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                if (!scalar_product(jacks[i], jacks[j]).is_zero()) {
                    res.pass = false;
                    res.detail = "<P_" + to_string(labels[i]) + ", P_" + to_string(labels[j]) + "> != 0";
                    return res;
                }
            if (!(scalar_product(jacks[i], jacks[i]) * b_lambda(lambda)).is_one()) {
                res.pass = false;
                res.detail = "norm formula fails for P_" + to_string(lambda);
                return res;
            }
            if (!x_poly_equal(eps_poly(jacks[i]), spec_formula(lambda))) {
                res.pass = false;
                res.detail = "specialisation formula fails for P_" + to_string(lambda);
                return res;
            }
        }
    }
    return res;
}

CheckResult check_kaneko_sum_rule(int max_k) {
    CheckResult res{"kaneko-sum-rule", true, ""};
    for (int k = 0; k <= max_k; ++k) {
        SymFunc sum(Basis::powersum);
        for (const auto& lambda : enumerate_partitions(k)) sum += convert(kaneko_C(lambda), Basis::powersum);
        const SymFunc target =
            SymFunc::basis_element(Basis::powersum, Partition(std::vector<int>(k, 1)));
        if (!(sum == target)) {
            res.pass = false;
            res.detail = "sum of C_lambda at weight " + std::to_string(k) + " is not p_1^" + std::to_string(k);
            return res;
        }
    }
    return res;
}

CheckResult check_kernel_theorem(int n, int m, int max_weight) {
    CheckResult res{"kernel-theorem " + scope_tag(n, m), true, ""};
    for (const auto& lambda : labels_up_to(max_weight)) {
        const bool vanishes = super_jack(lambda, n, m).poly.is_zero();
        const bool outside = !in_fat_hook(lambda, n, m);
        if (vanishes != outside) {
            res.pass = false;
            res.detail = "SP_" + to_string(lambda) + (vanishes ? " vanishes inside" : " survives outside") +
                         " the fat hook";
            return res;
        }
    }
    return res;
}

CheckResult check_quasi_invariance(int n, int m, int max_degree) {
    CheckResult res{"quasi-invariance " + scope_tag(n, m), true, ""};
    for (const auto& nu : labels_up_to(max_degree)) {
        for (const bool use_jack : {false, true}) {
            if (use_jack && !in_fat_hook(nu, n, m)) continue;
            const MPoly p = use_jack ? super_jack(nu, n, m).poly
                                     : phi(SymFunc::basis_element(Basis::powersum, nu), n, m).poly;
            if (!p.is_symmetric_in_x() || !p.is_symmetric_in_y()) {
                res.pass = false;
                res.detail = "phi image of weight " + std::to_string(nu.weight()) + " is not block symmetric";
                return res;
            }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j)
                    if (!quasi_invariance_check(p, i, j)) {
                        res.pass = false;
                        res.detail = "quasi-invariance fails for phi(p_" + to_string(nu) + ") at (i,j)=(" +
                                     std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                        return res;
                    }
        }
    }
    return res;
}

CheckResult check_dunkl_commutativity(int max_vars, int max_degree, std::uint64_t seed) {
    CheckResult res{"dunkl-commutativity", true, ""};
    std::mt19937_64 rng(seed);
    for (int nvars = 2; nvars <= max_vars; ++nvars)
        for (int rep = 0; rep < 4; ++rep) {
            const MPoly p = random_mpoly(rng, nvars, 0, max_degree);
            for (int i = 0; i < nvars; ++i)
                for (int j = i + 1; j < nvars; ++j)
                    if (!(dunkl_apply(dunkl_apply(p, i), j) == dunkl_apply(dunkl_apply(p, j), i))) {
                        res.pass = false;
                        res.detail = "[D_" + std::to_string(i + 1) + ", D_" + std::to_string(j + 1) +
                                     "] != 0 on a random polynomial in " + std::to_string(nvars) + " variables";
                        return res;
                    }
        }
    return res;
}

CheckResult check_m0_reduction(int nvars, int rmax, int max_degree, std::uint64_t seed) {
    CheckResult res{"m0-reduction", true, ""};
    std::mt19937_64 rng(seed);
    for (int rep = 0; rep < 4; ++rep) {
        const MPoly p = symmetrize(random_mpoly(rng, nvars, 0, max_degree));
        for (int r = 1; r <= rmax; ++r) {
            const SymFunc pr = SymFunc::basis_element(Basis::powersum, Partition{r});
            if (!(deformed_integral_apply(p, r) == symmetric_integral_apply(pr, p))) {
                res.pass = false;
                res.detail = "deformed integral r=" + std::to_string(r) + " differs from Res p_r(D) at m=0";
                return res;
            }
        }
    }
    return res;
}

CheckResult check_integral_commutativity(int n, int m, int rmax, int max_weight) {
    CheckResult res{"integral-commutativity " + scope_tag(n, m), true, ""};
    for (const auto& lambda : hook_labels_up_to(n, m, max_weight)) {
        const MPoly sp = super_jack(lambda, n, m).poly;
        for (int r = 1; r <= rmax; ++r)
            for (int s = r + 1; s <= rmax; ++s) {
                const MPoly rs = deformed_integral_apply(deformed_integral_apply(sp, s), r);
                const MPoly sr = deformed_integral_apply(deformed_integral_apply(sp, r), s);
                if (!(rs == sr)) {
                    res.pass = false;
                    res.detail = "[L^(" + std::to_string(r) + "), L^(" + std::to_string(s) + ")] != 0 on SP_" +
                                 to_string(lambda);
                    return res;
                }
            }
    }
    return res;
}

CheckResult check_orthogonality_theorem(int n, int m, int max_degree) {
    CheckResult res{"orthogonality-theorem " + scope_tag(n, m), true, ""};
    for (int d = 0; d <= max_degree; ++d) {
        const GramReport rep = gram_matrix(n, m, d);
        if (!rep.pass) {
            res.pass = false;
            res.detail = std::string(rep.diagonal ? "diagonal values" : "off-diagonal entries") +
                         " wrong at degree " + std::to_string(d);
            return res;
        }
    }
    return res;
}

CheckResult check_reproducing(int n, int m, int max_weight) {
    CheckResult res{"reproducing-kernel " + scope_tag(n, m), true, ""};
    for (const auto& mu : hook_labels_up_to(n, m, max_weight))
        if (!reproducing_check(mu, n, m)) {
            res.pass = false;
            res.detail = "kernel component fails to reproduce SC_" + to_string(mu);
            return res;
        }
    return res;
}

CheckResult check_intertwining(int n, int m, int rmax, int max_weight) {
    CheckResult res{"lassalle-nekrasov " + scope_tag(n, m), true, ""};
    for (const auto& lambda : hook_labels_up_to(n, m, max_weight)) {
        const MPoly sp = super_jack(lambda, n, m).poly;
        const MPoly sh = super_hermite(lambda, n, m);
        for (int r = 1; r <= rmax; ++r) {
            const MPoly lhs = exp_half_L(trig_integral_apply(sp, r), ExpSign::minus);
            const MPoly via_conj = harmonic_integral_apply(sh, r, HarmonicMode::conjugation);
            const MPoly via_comm = harmonic_integral_apply(sh, r, HarmonicMode::commutator);
            if (!(via_conj == via_comm)) {
                res.pass = false;
                res.detail = "harmonic modes disagree for r=" + std::to_string(r) + " on SH_" + to_string(lambda);
                return res;
            }
            if (!(lhs == via_conj)) {
                res.pass = false;
                res.detail = "intertwining diagram fails for r=" + std::to_string(r) + " at SP_" + to_string(lambda);
                return res;
            }
            const ThetaFunction ev = trig_eigenvalue(lambda, r, n, m);
            if (!(via_conj == sh.scaled(ev))) {
                res.pass = false;
                res.detail = "SH_" + to_string(lambda) + " is not an eigenfunction for r=" + std::to_string(r);
                return res;
            }
        }
    }
    for (int d = 0; d <= max_weight; ++d) {
        const GramReport sp_rep = gram_matrix(n, m, d);
        const GramReport sh_rep = hermite_gram(n, m, d);
        if (!(sp_rep.matrix == sh_rep.matrix) || !sh_rep.pass) {
            res.pass = false;
            res.detail = "SH Gram data differs from the SP Gram data at degree " + std::to_string(d);
            return res;
        }
    }
    return res;
}

CheckResult check_numeric_bound(int n, int m, const std::vector<Rational>& thetas, int max_weight,
                                int npoints, std::uint64_t seed) {
    CheckResult res{"numeric-bound " + scope_tag(n, m), true, ""};
    int used = 0;
    for (const auto& theta : thetas) {
        try {
            check_theta_guard(theta, ThetaGuard::fat_hook_excluded(n, m));
        } catch (const error&) {
            continue;  // excluded value; nothing to test
        }
        ++used;
        for (const auto& lambda : hook_labels_up_to(n, m, max_weight)) {
            const BoundReport rep = bound_check(lambda, n, m, theta, npoints, seed);
            if (!rep.pass) {
                res.pass = false;
                std::ostringstream os;
                os << "bound exceeded for SP_" << to_string(lambda) << " at theta=" << to_string(theta)
                   << " (ratio " << rep.worst_ratio << ")";
                res.detail = os.str();
                return res;
            }
        }
    }
    if (used == 0) res.detail = "all candidate theta values excluded; nothing checked";
    return res;
}

std::vector<CheckResult> verify_suite(int n, int m, int degree) {
    std::vector<CheckResult> out;
    out.push_back(check_jack_sanity(degree));
    out.push_back(check_kaneko_sum_rule(std::min(degree, 4)));
    out.push_back(check_kernel_theorem(n, m, degree));
    out.push_back(check_quasi_invariance(n, m, std::min(degree, 4)));
    out.push_back(check_dunkl_commutativity(3, std::min(degree, 4), 0x5eedULL));
    out.push_back(check_m0_reduction(std::max(2, n), 3, std::min(degree, 4), 0x5eedULL));
    out.push_back(check_integral_commutativity(n, m, 3, std::min(degree, 4)));
    out.push_back(check_orthogonality_theorem(n, m, degree));
    out.push_back(check_reproducing(n, m, std::min(degree, 3)));
    out.push_back(check_intertwining(n, m, 3, std::min(degree, 4)));
    out.push_back(check_numeric_bound(n, m, {Rational(2), Rational(3)}, std::min(degree, 4), 50, 20240719ULL));
    return out;
}

}  // namespace superjack
