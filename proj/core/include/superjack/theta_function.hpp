#pragma once

#include <string>
#include <utility>
#include <vector>

#include "superjack/rational.hpp"

namespace superjack {

// Dense univariate polynomial over Rational in the formal parameter theta.
// Backing storage for the two legs of a ThetaFunction.
class ThetaPoly {
public:
    ThetaPoly() = default;
    ThetaPoly(int c) : ThetaPoly(Rational(c)) {}
    ThetaPoly(const Rational& c);
    explicit ThetaPoly(std::vector<Rational> coeffs);
    static ThetaPoly variable();

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;
    Rational leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    ThetaPoly operator-() const;
    friend ThetaPoly operator+(const ThetaPoly& a, const ThetaPoly& b);
    friend ThetaPoly operator-(const ThetaPoly& a, const ThetaPoly& b);
    friend ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b);
    friend bool operator==(const ThetaPoly& a, const ThetaPoly& b) { return a.coeffs_ == b.coeffs_; }

    // field division over Q; throws on zero divisor
    static std::pair<ThetaPoly, ThetaPoly> divrem(const ThetaPoly& a, const ThetaPoly& b);
    // monic gcd; gcd(0,0) = 0
    static ThetaPoly gcd(const ThetaPoly& a, const ThetaPoly& b);

    Rational evaluate(const Rational& v) const;
    void make_monic();

private:
    // coeffs_[k] multiplies theta^k; invariant: empty or nonzero back()
    std::vector<Rational> coeffs_;
    void trim();
};

// Restrictions on admissible numeric values of theta.
struct ThetaGuard {
    enum class Kind { none, nonpositive_excluded, fat_hook_excluded };
    Kind kind = Kind::none;
    int n = 0;
    int m = 0;

    static ThetaGuard none() { return {}; }
    static ThetaGuard nonpositive_excluded() { return {Kind::nonpositive_excluded, 0, 0}; }
    static ThetaGuard fat_hook_excluded(int n, int m) { return {Kind::fat_hook_excluded, n, m}; }
};

// Throws errc::theta_excluded naming the violated rule.
void check_theta_guard(const Rational& value, const ThetaGuard& guard);

// Element of the field Q(theta), kept in canonical form: numerator and
// denominator coprime, denominator monic, zero represented as 0/1.
class ThetaFunction {
public:
    ThetaFunction() : num_(), den_(1) {}
    ThetaFunction(int c) : num_(c), den_(1) {}
    ThetaFunction(const Rational& c) : num_(c), den_(1) {}
    explicit ThetaFunction(ThetaPoly num) : num_(std::move(num)), den_(1) {}
    ThetaFunction(ThetaPoly num, ThetaPoly den);
    static ThetaFunction theta() { return ThetaFunction(ThetaPoly::variable()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const ThetaPoly& num() const { return num_; }
    const ThetaPoly& den() const { return den_; }

    ThetaFunction operator-() const;
    friend ThetaFunction operator+(const ThetaFunction& a, const ThetaFunction& b);
    friend ThetaFunction operator-(const ThetaFunction& a, const ThetaFunction& b);
    friend ThetaFunction operator*(const ThetaFunction& a, const ThetaFunction& b);
    friend ThetaFunction operator/(const ThetaFunction& a, const ThetaFunction& b);
    ThetaFunction& operator+=(const ThetaFunction& o) { return *this = *this + o; }
    ThetaFunction& operator-=(const ThetaFunction& o) { return *this = *this - o; }
    ThetaFunction& operator*=(const ThetaFunction& o) { return *this = *this * o; }
    ThetaFunction& operator/=(const ThetaFunction& o) { return *this = *this / o; }
    friend bool operator==(const ThetaFunction& a, const ThetaFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    ThetaFunction inverse() const;
    ThetaFunction pow(int k) const;  // k >= 0

    // Evaluate at a rational theta value after checking the guard; throws
    // errc::theta_excluded or errc::theta_pole.
    Rational specialize(const Rational& value, const ThetaGuard& guard = ThetaGuard::none()) const;

private:
    ThetaPoly num_;
    ThetaPoly den_;
    void reduce();
};

// Canonical textual form, e.g. "theta^2-1", "(2*theta)/(theta+1)".
std::string to_string(const ThetaPoly& p);
std::string to_string(const ThetaFunction& f);

// Parses +,-,*,/,^ expressions in "theta" and integer literals; accepts
// everything to_string produces.
ThetaFunction parse_theta_function(const std::string& text);

}  // namespace superjack
