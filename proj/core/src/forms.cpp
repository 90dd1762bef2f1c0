#include "superjack/forms.hpp"

#include "superjack/error.hpp"

namespace superjack {

ThetaFunction bilinear_form(const SymFunc& f, const SymFunc& g, int n, int m) {
    return quantum_integral_apply(f, phi(g, n, m).poly).constant_term();
}

GramReport gram_matrix(int n, int m, int d) {
    if (d < 0) throw error(errc::invalid_argument, "degree must be non-negative");
    GramReport rep;
    rep.n = n;
    rep.m = m;
    rep.degree = d;
    rep.labels = enumerate_partitions(d, n, m);
    const std::vector<Partition> nus = enumerate_partitions(d);
    const ThetaFunction a = ThetaFunction::theta() * n - ThetaFunction(m);

    const std::size_t size = rep.labels.size();
    rep.matrix.assign(size, std::vector<ThetaFunction>(size));
    rep.expected_diagonal.resize(size);
    for (std::size_t i = 0; i < size; ++i)
        rep.expected_diagonal[i] = pochhammer_gen(a, rep.labels[i]) / b_lambda(rep.labels[i]);

    // The rows all expand over the same power sums p_nu, |nu| = d, so the
    // operator chains are applied once per column and reused.
    std::vector<SymFunc> row_expansions(size);
    for (std::size_t i = 0; i < size; ++i) row_expansions[i] = convert(jack(rep.labels[i]), Basis::powersum);

    for (std::size_t j = 0; j < size; ++j) {
        const MPoly sp = super_jack(rep.labels[j], n, m).poly;
        std::map<Partition, ThetaFunction, PartitionLess> chain_ct;
        for (const auto& nu : nus) {
            MPoly q = sp;
            for (int k = 0; k < nu.length(); ++k) q = deformed_integral_apply(q, nu.part(k));
            chain_ct.emplace(nu, q.constant_term());
        }
        for (std::size_t i = 0; i < size; ++i) {
            ThetaFunction entry;
            for (const auto& [nu, c] : row_expansions[i].terms()) entry += c * chain_ct.at(nu);
            rep.matrix[i][j] = std::move(entry);
        }
    }

    rep.diagonal = true;
    rep.matches_expected = true;
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            if (i != j && !rep.matrix[i][j].is_zero()) rep.diagonal = false;
            if (i == j && !(rep.matrix[i][j] == rep.expected_diagonal[i])) rep.matches_expected = false;
        }
    rep.pass = rep.diagonal && rep.matches_expected;
    return rep;
}

bool representative_independence_check(const SymFunc& f, const Partition& kernel_lambda, const SymFunc& g,
                                       int n, int m) {
    if (in_fat_hook(kernel_lambda, n, m))
        throw error(errc::kernel_label_in_fat_hook,
                    to_string(kernel_lambda) + " lies in the fat hook, so P_" + to_string(kernel_lambda) +
                        " is not a kernel element");
    const SymFunc shifted = convert(f, Basis::powersum) + convert(jack(kernel_lambda), Basis::powersum);
    return bilinear_form(shifted, g, n, m) == bilinear_form(f, g, n, m);
}

KernelComponent sf_component(int n, int m, int d) {
    if (d < 0) throw error(errc::invalid_argument, "degree must be non-negative");
    KernelComponent comp;
    comp.n = n;
    comp.m = m;
    comp.d = d;
    const ThetaFunction dfact{Rational(factorial(d))};
    for (const auto& lambda : enumerate_partitions(d, n, m)) {
        const ThetaFunction value = evaluate_at_ones(super_C(lambda, n, m).poly);
        comp.entries.emplace_back(lambda, ThetaFunction(1) / (dfact * value));
    }
    return comp;
}

bool reproducing_check(const Partition& mu, int n, int m) {
    if (!in_fat_hook(mu, n, m))
        throw error(errc::not_in_fat_hook, to_string(mu) + " lies outside the fat hook");
    const SymFunc c_mu = kaneko_C(mu);
    const KernelComponent comp = sf_component(n, m, mu.weight());
    MPoly acc(n, m);
    for (const auto& [lambda, weight] : comp.entries) {
        const ThetaFunction pairing = bilinear_form(c_mu, kaneko_C(lambda), n, m);
        if (pairing.is_zero()) continue;
        acc += super_C(lambda, n, m).poly.scaled(weight * pairing);
    }
    return acc == super_C(mu, n, m).poly;
}

bool hermite_generating_check(int n, int m, int dmax) {
    if (dmax < 0) throw error(errc::invalid_argument, "degree must be non-negative");
    const ThetaFunction a = ThetaFunction::theta() * n - ThetaFunction(m);
    for (int d = 0; d <= dmax; ++d) {
        for (const auto& lambda : enumerate_partitions(d, n, m)) {
            MPoly acc(n, m);
            for (int e = 0; e <= dmax; ++e) {
                for (const auto& kappa : enumerate_partitions(e, n, m)) {
                    const ThetaFunction pairing = bilinear_form(jack(kappa), jack(lambda), n, m);
                    if (pairing.is_zero()) continue;
                    const ThetaFunction pref = b_lambda(kappa) / pochhammer_gen(a, kappa);
                    acc += super_hermite(kappa, n, m).scaled(pref * pairing);
                }
            }
            if (!(acc == super_hermite(lambda, n, m))) return false;
        }
    }
    return true;
}

GramReport hermite_gram(int n, int m, int d) {
    GramReport rep = gram_matrix(n, m, d);
    rep.family = "superhermite";
    rep.provenance =
        "entries transported from the (.,.) form through the exp(-L/2) isometry; no integration performed";
    return rep;
}

}  // namespace superjack
