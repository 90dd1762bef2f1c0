#include "superjack/theta_function.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "superjack/error.hpp"

namespace superjack {

ThetaPoly::ThetaPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

ThetaPoly::ThetaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ThetaPoly ThetaPoly::variable() {
    ThetaPoly p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

void ThetaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational ThetaPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

Rational ThetaPoly::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

ThetaPoly ThetaPoly::operator-() const {
    ThetaPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ThetaPoly operator+(const ThetaPoly& a, const ThetaPoly& b) {
    ThetaPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k)
        r.coeffs_[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    r.trim();
    return r;
}

ThetaPoly operator-(const ThetaPoly& a, const ThetaPoly& b) { return a + (-b); }

ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b) {
    if (a.is_zero() || b.is_zero()) return ThetaPoly();
    ThetaPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

std::pair<ThetaPoly, ThetaPoly> ThetaPoly::divrem(const ThetaPoly& a, const ThetaPoly& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
    ThetaPoly rem = a;
    ThetaPoly quot;
    const int db = b.degree();
    if (rem.degree() >= db) quot.coeffs_.assign(rem.degree() - db + 1, Rational(0));
    const Rational lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        const int shift = rem.degree() - db;
        const Rational c = rem.leading() / lb;
        quot.coeffs_[shift] = c;
        for (int k = 0; k <= db; ++k) rem.coeffs_[k + shift] -= c * b.coeffs_[k];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

namespace {

// Integer-polynomial helpers for the primitive PRS gcd.
using IPoly = std::vector<Int>;

void itrim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Int icontent(const IPoly& p) {
    Int g = 0;
    for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
    return g;
}

void iprimitive(IPoly& p) {
    Int g = icontent(p);
    if (g == 0) return;
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions
IPoly ipseudo_rem(IPoly a, const IPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const Int lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const Int la = a.back();
        for (auto& c : a) c *= lb;
        for (int k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
        itrim(a);
        if (a.empty()) break;
    }
    return a;
}

IPoly to_integer_poly(const ThetaPoly& p) {
    Int lcm = 1;
    for (const auto& c : p.coeffs()) {
        const Int d = denominator(c);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    IPoly r(p.coeffs().size());
    for (std::size_t k = 0; k < r.size(); ++k) {
        const Rational scaled = p.coeffs()[k] * lcm;
        r[k] = numerator(scaled);
    }
    return r;
}

}  // namespace

ThetaPoly ThetaPoly::gcd(const ThetaPoly& a, const ThetaPoly& b) {
    if (a.is_zero() && b.is_zero()) return ThetaPoly();
    if (a.is_zero()) {
        ThetaPoly g = b;
        g.make_monic();
        return g;
    }
    if (b.is_zero()) {
        ThetaPoly g = a;
        g.make_monic();
        return g;
    }
    IPoly u = to_integer_poly(a);
    IPoly v = to_integer_poly(b);
    iprimitive(u);
    iprimitive(v);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        IPoly r = ipseudo_rem(u, v);
        iprimitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> coeffs(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) coeffs[k] = Rational(u[k]);
    ThetaPoly g(std::move(coeffs));
    g.make_monic();
    return g;
}

Rational ThetaPoly::evaluate(const Rational& v) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

void ThetaPoly::make_monic() {
    if (is_zero()) return;
    const Rational l = leading();
    if (l == 1) return;
    for (auto& c : coeffs_) c /= l;
}

void check_theta_guard(const Rational& value, const ThetaGuard& guard) {
    if (guard.kind == ThetaGuard::Kind::none) return;
    if (value <= 0)
        throw error(errc::theta_excluded,
                    "theta = " + to_string(value) + " is excluded: zero and negative rationals are not admissible");
    if (guard.kind == ThetaGuard::Kind::fat_hook_excluded) {
        const Int p = numerator(value);
        const Int q = denominator(value);
        for (int i = 1; i <= guard.m; ++i)
            for (int j = 1; j <= guard.n; ++j)
                if (Int(i) * q == Int(j) * p)
                    throw error(errc::theta_excluded,
                                "theta = " + to_string(value) + " is excluded: equals " + std::to_string(i) + "/" +
                                    std::to_string(j) + " with 1<=i<=m=" + std::to_string(guard.m) +
                                    ", 1<=j<=n=" + std::to_string(guard.n));
    }
}

ThetaFunction::ThetaFunction(ThetaPoly num, ThetaPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error(errc::division_by_zero, "zero denominator in Q(theta) element");
    reduce();
}

void ThetaFunction::reduce() {
    if (num_.is_zero()) {
        den_ = ThetaPoly(1);
        return;
    }
    if (den_.degree() > 0 || num_.degree() > 0) {
        const ThetaPoly g = ThetaPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = ThetaPoly::divrem(num_, g).first;
            den_ = ThetaPoly::divrem(den_, g).first;
        }
    }
    const Rational l = den_.leading();
    if (l != 1) {
        den_.make_monic();
        num_ = num_ * ThetaPoly(Rational(1) / l);
    }
}

ThetaFunction ThetaFunction::operator-() const {
    ThetaFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

ThetaFunction operator+(const ThetaFunction& a, const ThetaFunction& b) {
    return ThetaFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ThetaFunction operator-(const ThetaFunction& a, const ThetaFunction& b) { return a + (-b); }

ThetaFunction operator*(const ThetaFunction& a, const ThetaFunction& b) {
    if (a.is_zero() || b.is_zero()) return ThetaFunction();
    return ThetaFunction(a.num_ * b.num_, a.den_ * b.den_);
}

ThetaFunction operator/(const ThetaFunction& a, const ThetaFunction& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "division by zero in Q(theta)");
    if (a.is_zero()) return ThetaFunction();
    return ThetaFunction(a.num_ * b.den_, a.den_ * b.num_);
}

ThetaFunction ThetaFunction::inverse() const {
    if (is_zero()) throw error(errc::division_by_zero, "inverse of zero in Q(theta)");
    return ThetaFunction(den_, num_);
}

ThetaFunction ThetaFunction::pow(int k) const {
    if (k < 0) throw error(errc::invalid_argument, "negative power of Q(theta) element");
    ThetaFunction r(1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
}

Rational ThetaFunction::specialize(const Rational& value, const ThetaGuard& guard) const {
    check_theta_guard(value, guard);
    const Rational d = den_.evaluate(value);
    if (d == 0)
        throw error(errc::theta_pole,
                    "denominator " + to_string(den_) + " vanishes at theta = " + to_string(value));
    return num_.evaluate(value) / d;
}

std::string to_string(const ThetaPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        if (k == 0) {
            out += to_string(a);
        } else {
            if (a != 1) {
                out += to_string(a);
                out += "*";
            }
            out += "theta";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::string to_string(const ThetaFunction& f) {
    if (f.den().is_one()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

namespace {

class ThetaParser {
public:
    explicit ThetaParser(const std::string& text) : text_(text) {}

    ThetaFunction parse() {
        ThetaFunction v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw error(errc::invalid_argument, "trailing characters in theta expression: \"" + text_ + "\"");
        return v;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ThetaFunction expr() {
        ThetaFunction v = term();
        while (true) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    ThetaFunction term() {
        ThetaFunction v = factor();
        while (true) {
            if (eat('*'))
                v *= factor();
            else if (eat('/'))
                v /= factor();
            else
                return v;
        }
    }

    ThetaFunction factor() {
        if (eat('-')) return -factor();
        ThetaFunction v = primary();
        if (eat('^')) {
            const int k = integer_literal();
            v = v.pow(k);
        }
        return v;
    }

    int integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw error(errc::invalid_argument, "expected integer exponent in theta expression");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    ThetaFunction primary() {
        const char c = peek();
        if (c == '(') {
            eat('(');
            ThetaFunction v = expr();
            if (!eat(')')) throw error(errc::invalid_argument, "unbalanced parenthesis in theta expression");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return ThetaFunction(Rational(Int(text_.substr(start, pos_ - start))));
        }
        if (text_.compare(pos_, 5, "theta") == 0) {
            pos_ += 5;
            return ThetaFunction::theta();
        }
        throw error(errc::invalid_argument, "unexpected character in theta expression: \"" + text_ + "\"");
    }
};

}  // namespace

ThetaFunction parse_theta_function(const std::string& text) { return ThetaParser(text).parse(); }

}  // namespace superjack
