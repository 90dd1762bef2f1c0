#include "superjack/deformed.hpp"

#include <cmath>
#include <mutex>
#include <random>
#include <tuple>

#include "superjack/error.hpp"

namespace superjack {

MPoly deformed_power_sum(int r, int n, int m) {
    if (r < 1) throw error(errc::invalid_argument, "deformed power sum needs r >= 1");
    MPoly p(n, m);
    const ThetaFunction neg_inv_theta = ThetaFunction(-1) / ThetaFunction::theta();
    for (int i = 0; i < n + m; ++i) {
        std::vector<int> e(n + m, 0);
        e[i] = r;
        p.add_term(e, i < n ? ThetaFunction(1) : neg_inv_theta);
    }
    return p;
}

SuperElement phi(const SymFunc& f, int n, int m) {
    const SymFunc fp = convert(f, Basis::powersum);
    MPoly out(n, m);
    for (const auto& [lambda, c] : fp.terms()) {
        MPoly t = MPoly::constant(n, m, c);
        for (int i = 0; i < lambda.length(); ++i) t *= deformed_power_sum(lambda.part(i), n, m);
        out += t;
    }
    return SuperElement{std::move(out), fp, false};
}

namespace {

std::mutex g_sj_mutex;
std::map<std::tuple<std::vector<int>, int, int>, SuperElement> g_sj_memo;

}  // namespace

const SuperElement& super_jack(const Partition& lambda, int n, int m) {
    const auto key = std::make_tuple(lambda.parts(), n, m);
    {
        std::lock_guard<std::mutex> lock(g_sj_mutex);
        auto it = g_sj_memo.find(key);
        if (it != g_sj_memo.end()) return it->second;
    }
    SuperElement e = phi(jack(lambda), n, m);
    e.outside_fat_hook = !in_fat_hook(lambda, n, m);
    std::lock_guard<std::mutex> lock(g_sj_mutex);
    return g_sj_memo.emplace(key, std::move(e)).first->second;
}

void clear_super_jack_memo() {
    std::lock_guard<std::mutex> lock(g_sj_mutex);
    g_sj_memo.clear();
}

SuperElement super_C(const Partition& lambda, int n, int m) {
    SuperElement e = super_jack(lambda, n, m);
    const ThetaFunction scale = kaneko_scale(lambda);
    e.poly = e.poly.scaled(scale);
    if (e.representative) e.representative = e.representative->scaled(scale);
    return e;
}

bool quasi_invariance_check(const MPoly& p, int i, int j) {
    if (i < 0 || i >= p.n() || j < 0 || j >= p.m())
        throw error(errc::invalid_argument, "quasi-invariance indices out of range");
    const int xi = i;
    const int yj = p.n() + j;
    const MPoly combo = p.derivative(xi) + p.derivative(yj).scaled(ThetaFunction::theta());
    return combo.substitute_var(yj, xi).is_zero();
}

ThetaFunction evaluate_at_ones(const MPoly& p) {
    return p.evaluate(std::vector<ThetaFunction>(p.vars(), ThetaFunction(1)));
}

bool eval_ones_check(const Partition& lambda, int n, int m) {
    if (!in_fat_hook(lambda, n, m))
        throw error(errc::not_in_fat_hook, to_string(lambda) + " lies outside the fat hook");
    const ThetaFunction lhs = evaluate_at_ones(super_jack(lambda, n, m).poly);
    const ThetaFunction x = ThetaFunction(n) - ThetaFunction(m) / ThetaFunction::theta();
    const ThetaFunction rhs = eval_x_poly(spec_formula(lambda), x);
    return lhs == rhs;
}

namespace {

// Deterministic points in the complex disk of radius 2, independent of any
// standard-library distribution implementation.
std::vector<std::vector<std::complex<double>>> sample_points(int vars, int npoints, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) / 9007199254740992.0; };  // [0,1)
    std::vector<std::vector<std::complex<double>>> pts(npoints);
    for (auto& pt : pts) {
        pt.resize(vars);
        for (auto& z : pt) {
            const double r = 2.0 * unit();
            const double phi = 2.0 * 3.14159265358979323846 * unit();
            z = std::polar(r, phi);
        }
    }
    return pts;
}

}  // namespace

BoundReport bound_check(const Partition& lambda, int n, int m, const Rational& theta_value,
                        int npoints, std::uint64_t seed) {
    check_theta_guard(theta_value, ThetaGuard::fat_hook_excluded(n, m));
    const MPoly sp = super_jack(lambda, n, m).poly;
    const double th = theta_value.convert_to<double>();
    const double b = b_lambda(lambda).specialize(theta_value).convert_to<double>();
    const double geom = std::sqrt(th) * n + m / std::sqrt(th);
    BoundReport rep;
    rep.points = npoints;
    for (const auto& pt : sample_points(n + m, npoints, seed)) {
        double norm_inf = 0.0;
        for (const auto& z : pt) norm_inf = std::max(norm_inf, std::abs(z));
        const double value = std::abs(sp.evaluate_numeric(pt, theta_value, ThetaGuard::none()));
        const double bound = std::pow(norm_inf * geom, lambda.weight()) / std::sqrt(b);
        const double limit = bound * (1.0 + 1e-9);
        if (bound > 0.0) rep.worst_ratio = std::max(rep.worst_ratio, value / bound);
        if (value > limit) rep.pass = false;
    }
    return rep;
}

}  // namespace superjack
