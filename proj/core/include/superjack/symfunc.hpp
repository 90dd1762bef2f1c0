#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "superjack/partition.hpp"

namespace superjack {

enum class Basis { monomial, powersum };

const char* basis_name(Basis b);
Basis parse_basis(const std::string& name);

// Sparse symmetric function: finitely many partitions mapping to Q(theta)
// coefficients in either the monomial or the power-sum basis.
class SymFunc {
public:
    using TermMap = std::map<Partition, ThetaFunction, PartitionLess>;

    SymFunc() = default;
    explicit SymFunc(Basis b) : basis_(b) {}
    static SymFunc unit(Basis b);
    static SymFunc basis_element(Basis b, const Partition& lambda);

    Basis basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    ThetaFunction coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const ThetaFunction& c);
    int max_weight() const;

    SymFunc operator-() const;
    SymFunc scaled(const ThetaFunction& c) const;
    friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
    SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
    SymFunc& operator-=(const SymFunc& o) { return *this = *this - o; }
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

private:
    Basis basis_ = Basis::monomial;
    TermMap terms_;
};

// Change of basis; round trips are exact identities.
SymFunc convert(const SymFunc& f, Basis target);

// Product, returned in the power-sum basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

// Bilinear extension of <p_lambda, p_mu> = theta^{-l(lambda)} z_lambda delta.
ThetaFunction scalar_product(const SymFunc& f, const SymFunc& g);

// Jack symmetric function, monic on m_lambda, in the monomial basis.
// Memoized; the reference stays valid until clear_jack_memo().
const SymFunc& jack(const Partition& lambda);

// |lambda|! / prod_s (a(s) + 1 + theta l(s))
ThetaFunction kaneko_scale(const Partition& lambda);

// Kaneko's normalisation C_lambda = kaneko_scale(lambda) * P_lambda.
SymFunc kaneko_C(const Partition& lambda);

// Polynomial in the substitution variable X with Q(theta) coefficients;
// entry k multiplies X^k.
using ThetaXPoly = std::vector<ThetaFunction>;

void trim_x_poly(ThetaXPoly& p);
bool x_poly_equal(const ThetaXPoly& a, const ThetaXPoly& b);
ThetaFunction eval_x_poly(const ThetaXPoly& p, const ThetaFunction& x);

// Substitute X for every power sum factor.
ThetaFunction eps_at(const SymFunc& f, const ThetaFunction& x);
ThetaXPoly eps_poly(const SymFunc& f);

// prod_s (theta X + a'(s) - theta l'(s)) / (a(s) + theta l(s) + theta)
ThetaXPoly spec_formula(const Partition& lambda);

// Optional persistent backing for the jack() memo table.
struct JackStore {
    std::function<std::optional<SymFunc>(const Partition&)> load;
    std::function<void(const Partition&, const SymFunc&)> save;
};
void set_jack_store(JackStore store);
void clear_jack_memo();

}  // namespace superjack
