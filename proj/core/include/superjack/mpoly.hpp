#pragma once

#include <complex>
#include <map>
#include <vector>

#include "superjack/theta_function.hpp"

namespace superjack {

// Term order for exponent vectors: total degree ascending, then
// lexicographically descending (x-heavy terms first within a degree).
struct ExpOrder {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse polynomial in x_1..x_n, y_1..y_m over Q(theta). A single exponent
// vector of length n+m covers both blocks, x-block first.
class MPoly {
public:
    using TermMap = std::map<std::vector<int>, ThetaFunction, ExpOrder>;

    MPoly() = default;
    MPoly(int n, int m);
    static MPoly constant(int n, int m, const ThetaFunction& c);
    // unified 0-based variable index: x_i for idx < n, y_{idx-n} otherwise
    static MPoly variable(int n, int m, int idx);

    int n() const { return n_; }
    int m() const { return m_; }
    int vars() const { return n_ + m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    ThetaFunction coeff(const std::vector<int>& exps) const;
    ThetaFunction constant_term() const;
    void add_term(const std::vector<int>& exps, const ThetaFunction& c);

    MPoly operator-() const;
    MPoly scaled(const ThetaFunction& c) const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    MPoly derivative(int var) const;
    MPoly swap_vars(int i, int j) const;
    // substitute x_from := x_to
    MPoly substitute_var(int from, int to) const;
    bool is_symmetric_in_x() const;
    bool is_symmetric_in_y() const;

    ThetaFunction evaluate(const std::vector<ThetaFunction>& point) const;
    std::complex<double> evaluate_numeric(const std::vector<std::complex<double>>& point,
                                          const Rational& theta_value, const ThetaGuard& guard) const;

private:
    int n_ = 0;
    int m_ = 0;
    TermMap terms_;
    void require_same_shape(const MPoly& o) const;
};

}  // namespace superjack
