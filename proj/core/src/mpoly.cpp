#include "superjack/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "superjack/error.hpp"

namespace superjack {

bool ExpOrder::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a > b;
}

MPoly::MPoly(int n, int m) : n_(n), m_(m) {
    if (n < 0 || m < 0) throw error(errc::invalid_argument, "variable counts must be non-negative");
}

MPoly MPoly::constant(int n, int m, const ThetaFunction& c) {
    MPoly p(n, m);
    p.add_term(std::vector<int>(n + m, 0), c);
    return p;
}

MPoly MPoly::variable(int n, int m, int idx) {
    if (idx < 0 || idx >= n + m) throw error(errc::invalid_argument, "variable index out of range");
    MPoly p(n, m);
    std::vector<int> e(n + m, 0);
    e[idx] = 1;
    p.add_term(e, ThetaFunction(1));
    return p;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // map order is graded, so the last key has maximal degree
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

ThetaFunction MPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? ThetaFunction() : it->second;
}

ThetaFunction MPoly::constant_term() const { return coeff(std::vector<int>(vars(), 0)); }

void MPoly::add_term(const std::vector<int>& exps, const ThetaFunction& c) {
    if (static_cast<int>(exps.size()) != vars())
        throw error(errc::invalid_argument, "exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MPoly::require_same_shape(const MPoly& o) const {
    if (n_ != o.n_ || m_ != o.m_)
        throw error(errc::invalid_argument, "polynomials live in different variable blocks");
}

MPoly MPoly::operator-() const {
    MPoly r(n_, m_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::scaled(const ThetaFunction& c) const {
    MPoly r(n_, m_);
    if (c.is_zero()) return r;
    for (const auto& [e, tc] : terms_) r.terms_.emplace(e, tc * c);
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    a.require_same_shape(b);
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.require_same_shape(b);
    MPoly r(a.n_, a.m_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::derivative(int var) const {
    if (var < 0 || var >= vars()) throw error(errc::invalid_argument, "variable index out of range");
    MPoly r(n_, m_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        --d[var];
        r.add_term(d, c * ThetaFunction(e[var]));
    }
    return r;
}

MPoly MPoly::swap_vars(int i, int j) const {
    MPoly r(n_, m_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> s = e;
        std::swap(s[i], s[j]);
        r.add_term(s, c);
    }
    return r;
}

MPoly MPoly::substitute_var(int from, int to) const {
    MPoly r(n_, m_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> s = e;
        s[to] += s[from];
        s[from] = 0;
        r.add_term(s, c);
    }
    return r;
}

bool MPoly::is_symmetric_in_x() const {
    for (int i = 0; i + 1 < n_; ++i)
        if (!(swap_vars(i, i + 1) == *this)) return false;
    return true;
}

bool MPoly::is_symmetric_in_y() const {
    for (int j = n_; j + 1 < n_ + m_; ++j)
        if (!(swap_vars(j, j + 1) == *this)) return false;
    return true;
}

ThetaFunction MPoly::evaluate(const std::vector<ThetaFunction>& point) const {
    if (static_cast<int>(point.size()) != vars())
        throw error(errc::invalid_argument, "evaluation point has wrong length");
    ThetaFunction acc;
    for (const auto& [e, c] : terms_) {
        ThetaFunction t = c;
        for (std::size_t k = 0; k < point.size(); ++k)
            if (e[k] > 0) t *= point[k].pow(e[k]);
        acc += t;
    }
    return acc;
}

std::complex<double> MPoly::evaluate_numeric(const std::vector<std::complex<double>>& point,
                                             const Rational& theta_value, const ThetaGuard& guard) const {
    if (static_cast<int>(point.size()) != vars())
        throw error(errc::invalid_argument, "evaluation point has wrong length");
    check_theta_guard(theta_value, guard);
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> t(c.specialize(theta_value).convert_to<double>(), 0.0);
        for (std::size_t k = 0; k < point.size(); ++k)
            for (int rep = 0; rep < e[k]; ++rep) t *= point[k];
        acc += t;
    }
    return acc;
}

}  // namespace superjack
