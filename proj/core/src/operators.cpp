#include "superjack/operators.hpp"

#include <string>

#include "superjack/error.hpp"

namespace superjack {

namespace {

// (-theta)^{p(i)} with p the block parity
ThetaFunction parity_factor(const MPoly& p, int i) {
    return i < p.n() ? ThetaFunction(1) : -ThetaFunction::theta();
}

// (-theta)^{-p(i)}
ThetaFunction parity_factor_inv(const MPoly& p, int i) {
    return i < p.n() ? ThetaFunction(1) : ThetaFunction(-1) / ThetaFunction::theta();
}

// (-theta)^{1-p(j)}
ThetaFunction cross_factor(const MPoly& p, int j) {
    return j < p.n() ? -ThetaFunction::theta() : ThetaFunction(1);
}

}  // namespace

MPoly divided_difference(const MPoly& p, int i, int j) {
    const int v = p.vars();
    if (i < 0 || j < 0 || i >= v || j >= v || i == j)
        throw error(errc::invalid_argument, "divided difference needs two distinct variables");
    if (!p.substitute_var(i, j).is_zero())
        throw error(errc::nonzero_remainder, "polynomial is not divisible by (x_" + std::to_string(i + 1) +
                                                 " - x_" + std::to_string(j + 1) + ")");
    // x_i^a x_j^b = (x_i - x_j) sum_t x_i^{a-1-t} x_j^{b+t} + x_j^{a+b}
    MPoly q(p.n(), p.m());
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> f = e;
        const int a = e[i], b = e[j];
        for (int t = 0; t < a; ++t) {
            f[i] = a - 1 - t;
            f[j] = b + t;
            q.add_term(f, c);
        }
    }
    return q;
}

MPoly dunkl_apply(const MPoly& p, int i) {
    if (p.m() != 0)
        throw error(errc::invalid_argument, "Dunkl operators act on the plain N-variable ring (m = 0)");
    if (i < 0 || i >= p.n()) throw error(errc::invalid_argument, "Dunkl direction out of range");
    MPoly out = p.derivative(i);
    const ThetaFunction th = ThetaFunction::theta();
    for (int j = 0; j < p.n(); ++j) {
        if (j == i) continue;
        // antisymmetric under the swap, so the division is always exact
        out += divided_difference(p - p.swap_vars(i, j), i, j).scaled(th);
    }
    return out;
}

MPoly symmetric_integral_apply(const SymFunc& f, const MPoly& p) {
    if (p.m() != 0)
        throw error(errc::invalid_argument, "symmetric integrals act on the plain N-variable ring (m = 0)");
    if (!p.is_symmetric_in_x())
        throw error(errc::asymmetric_input, "symmetric integral applied to an asymmetric polynomial");
    const SymFunc fp = convert(f, Basis::powersum);
    MPoly acc(p.n(), 0);
    for (const auto& [mu, c] : fp.terms()) {
        MPoly q = p;
        for (int k = 0; k < mu.length(); ++k) {
            const int r = mu.part(k);
            MPoly s(p.n(), 0);
            for (int i = 0; i < p.n(); ++i) {
                MPoly t = q;
                for (int rep = 0; rep < r; ++rep) t = dunkl_apply(t, i);
                s += t;
            }
            q = std::move(s);
        }
        acc += q.scaled(c);
    }
    return acc;
}

std::vector<MPoly> deformed_partials(const MPoly& p, int r) {
    if (r < 1) throw error(errc::invalid_argument, "operator order must be positive");
    const int v = p.vars();
    std::vector<MPoly> level(v);
    for (int i = 0; i < v; ++i) level[i] = p.derivative(i).scaled(parity_factor(p, i));
    for (int lev = 2; lev <= r; ++lev) {
        std::vector<MPoly> next(v);
        for (int i = 0; i < v; ++i) {
            MPoly acc = level[i].derivative(i).scaled(parity_factor(p, i));
            for (int j = 0; j < v; ++j) {
                if (j == i) continue;
                acc -= divided_difference(level[i] - level[j], i, j).scaled(cross_factor(p, j));
            }
            next[i] = std::move(acc);
        }
        level = std::move(next);
    }
    return level;
}

MPoly deformed_partial_apply(const MPoly& p, int i, int r) {
    if (i < 0 || i >= p.vars()) throw error(errc::invalid_argument, "variable index out of range");
    return deformed_partials(p, r)[i];
}

MPoly deformed_integral_apply(const MPoly& p, int r) {
    const std::vector<MPoly> partials = deformed_partials(p, r);
    MPoly out(p.n(), p.m());
    for (int i = 0; i < p.vars(); ++i) out += partials[i].scaled(parity_factor_inv(p, i));
    return out;
}

MPoly quantum_integral_apply(const SymFunc& f, const MPoly& p) {
    const SymFunc fp = convert(f, Basis::powersum);
    MPoly acc(p.n(), p.m());
    for (const auto& [mu, c] : fp.terms()) {
        MPoly q = p;
        for (int k = 0; k < mu.length(); ++k) q = deformed_integral_apply(q, mu.part(k));
        acc += q.scaled(c);
    }
    return acc;
}

std::vector<MPoly> trig_partials(const MPoly& p, int r) {
    if (r < 1) throw error(errc::invalid_argument, "operator order must be positive");
    const int v = p.vars();
    auto euler = [&](const MPoly& q, int i) {
        return (MPoly::variable(p.n(), p.m(), i) * q.derivative(i)).scaled(parity_factor(p, i));
    };
    std::vector<MPoly> level(v);
    for (int i = 0; i < v; ++i) level[i] = euler(p, i);
    const ThetaFunction half(Rational(1, 2));
    for (int lev = 2; lev <= r; ++lev) {
        std::vector<MPoly> next(v);
        for (int i = 0; i < v; ++i) {
            MPoly acc = euler(level[i], i);
            for (int j = 0; j < v; ++j) {
                if (j == i) continue;
                const MPoly num =
                    (MPoly::variable(p.n(), p.m(), i) + MPoly::variable(p.n(), p.m(), j)) * (level[i] - level[j]);
                acc -= divided_difference(num, i, j).scaled(cross_factor(p, j) * half);
            }
            next[i] = std::move(acc);
        }
        level = std::move(next);
    }
    return level;
}

MPoly trig_integral_apply(const MPoly& p, int r) {
    const std::vector<MPoly> partials = trig_partials(p, r);
    MPoly out(p.n(), p.m());
    for (int i = 0; i < p.vars(); ++i) out += partials[i].scaled(parity_factor_inv(p, i));
    return out;
}

ThetaFunction trig_eigenvalue(const Partition& lambda, int r, int n, int m) {
    const SuperElement sp = super_jack(lambda, n, m);
    if (sp.outside_fat_hook || sp.poly.is_zero())
        throw error(errc::not_in_fat_hook,
                    "SP_" + to_string(lambda) + " vanishes for (n,m)=(" + std::to_string(n) + "," +
                        std::to_string(m) + ")");
    const MPoly image = trig_integral_apply(sp.poly, r);
    const auto& lead = *sp.poly.terms().begin();
    const ThetaFunction c = image.coeff(lead.first) / lead.second;
    if (!(image == sp.poly.scaled(c)))
        throw error(errc::not_an_eigenfunction,
                    "trig integral r=" + std::to_string(r) + " is not scalar on SP_" + to_string(lambda));
    return c;
}

MPoly exp_half_L(const MPoly& p, ExpSign sign) {
    const int d = p.total_degree();
    if (d < 0) return p;
    MPoly acc = p;
    MPoly power = p;
    Rational coeff = 1;
    for (int k = 1; k <= d / 2; ++k) {
        power = deformed_integral_apply(power, 2);
        coeff /= 2 * k;
        const Rational signed_coeff = (sign == ExpSign::minus && k % 2 == 1) ? Rational(-coeff) : coeff;
        acc += power.scaled(ThetaFunction(signed_coeff));
    }
    return acc;
}

MPoly super_hermite(const Partition& lambda, int n, int m) {
    if (!in_fat_hook(lambda, n, m))
        throw error(errc::not_in_fat_hook, to_string(lambda) + " lies outside the fat hook");
    return exp_half_L(super_jack(lambda, n, m).poly, ExpSign::minus);
}

namespace {

// k-fold nested commutator [...[trig^{(r)}, L], ..., L] applied to p
MPoly nested_commutator_apply(const MPoly& p, int r, int k) {
    if (k == 0) return trig_integral_apply(p, r);
    return nested_commutator_apply(deformed_integral_apply(p, 2), r, k - 1) -
           deformed_integral_apply(nested_commutator_apply(p, r, k - 1), 2);
}

}  // namespace

MPoly harmonic_integral_apply(const MPoly& p, int r, HarmonicMode mode) {
    if (r < 1) throw error(errc::invalid_argument, "operator order must be positive");
    if (mode == HarmonicMode::conjugation)
        return exp_half_L(trig_integral_apply(exp_half_L(p, ExpSign::plus), r), ExpSign::minus);
    MPoly acc = trig_integral_apply(p, r);
    Rational coeff = 1;
    for (int k = 1; k <= r; ++k) {
        coeff /= 2 * k;
        acc += nested_commutator_apply(p, r, k).scaled(ThetaFunction(coeff));
    }
    return acc;
}

MPoly apply_operator(const OperatorRequest& req, const MPoly& p) {
    using Kind = OperatorRequest::Kind;
    switch (req.kind) {
        case Kind::dunkl:
            return dunkl_apply(p, req.index);
        case Kind::symmetric_integral:
            if (req.datum) return symmetric_integral_apply(*req.datum, p);
            return symmetric_integral_apply(SymFunc::basis_element(Basis::powersum, Partition{req.order}), p);
        case Kind::deformed_rational:
            if (req.datum) return quantum_integral_apply(*req.datum, p);
            return deformed_integral_apply(p, req.order);
        case Kind::deformed_trig:
            return trig_integral_apply(p, req.order);
        case Kind::deformed_harmonic:
            return harmonic_integral_apply(p, req.order, req.mode);
        case Kind::exp_half_L:
            return exp_half_L(p, req.sign);
    }
    throw error(errc::invalid_argument, "unknown operator kind");
}

}  // namespace superjack
