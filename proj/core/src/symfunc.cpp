#include "superjack/symfunc.hpp"

#include <algorithm>
#include <mutex>

#include "superjack/error.hpp"

namespace superjack {

const char* basis_name(Basis b) { return b == Basis::monomial ? "monomial" : "powersum"; }

Basis parse_basis(const std::string& name) {
    if (name == "monomial") return Basis::monomial;
    if (name == "powersum") return Basis::powersum;
    throw error(errc::invalid_argument, "unknown basis: \"" + name + "\"");
}

SymFunc SymFunc::unit(Basis b) {
    SymFunc f(b);
    f.add_term(Partition(), ThetaFunction(1));
    return f;
}

SymFunc SymFunc::basis_element(Basis b, const Partition& lambda) {
    SymFunc f(b);
    f.add_term(lambda, ThetaFunction(1));
    return f;
}

ThetaFunction SymFunc::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? ThetaFunction() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const ThetaFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int SymFunc::max_weight() const {
    int w = 0;
    for (const auto& [lambda, c] : terms_) w = std::max(w, lambda.weight());
    return w;
}

SymFunc SymFunc::operator-() const {
    SymFunc r(basis_);
    for (const auto& [lambda, c] : terms_) r.terms_.emplace(lambda, -c);
    return r;
}

SymFunc SymFunc::scaled(const ThetaFunction& c) const {
    SymFunc r(basis_);
    if (c.is_zero()) return r;
    for (const auto& [lambda, coeff] : terms_) r.terms_.emplace(lambda, coeff * c);
    return r;
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
    const SymFunc& rhs = (a.basis() == b.basis()) ? b : convert(b, a.basis());
    SymFunc r = a;
    for (const auto& [lambda, c] : rhs.terms()) r.add_term(lambda, c);
    return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) { return a + (-b); }

namespace {

// Per-degree transition data between the power-sum and monomial bases.
struct DegreeTables {
    std::vector<Partition> order;  // enumerate_partitions order (dominance-refining)
    std::map<Partition, int, PartitionLess> index;
    // row i: expansion of p_{order[i]} over monomials (theta-free)
    std::vector<std::map<Partition, Rational, PartitionLess>> p_to_m;
    // row i: expansion of m_{order[i]} over power sums
    std::vector<std::map<Partition, Rational, PartitionLess>> m_to_p;
};

std::map<Partition, Rational, PartitionLess> powersum_in_monomials(const Partition& lambda) {
    // Augmented monomials M_mu = m_mu * prod_k mult_k(mu)! satisfy
    //   M_mu * p_r = M_{mu with r appended} + sum_j M_{mu with part j raised by r},
    // which expands p_lambda by iterating over its parts.
    std::map<Partition, Rational, PartitionLess> aug;
    aug.emplace(Partition(), Rational(1));
    for (int pi = 0; pi < lambda.length(); ++pi) {
        const int r = lambda.part(pi);
        std::map<Partition, Rational, PartitionLess> next;
        for (const auto& [mu, c] : aug) {
            std::vector<int> appended = mu.parts();
            appended.insert(std::upper_bound(appended.begin(), appended.end(), r, std::greater<int>()), r);
            next[Partition(std::move(appended))] += c;
            for (int j = 0; j < mu.length(); ++j) {
                std::vector<int> raised = mu.parts();
                raised[j] += r;
                std::sort(raised.begin(), raised.end(), std::greater<int>());
                next[Partition(std::move(raised))] += c;
            }
        }
        aug = std::move(next);
    }
    std::map<Partition, Rational, PartitionLess> out;
    for (const auto& [mu, c] : aug) {
        Rational mults = 1;
        int i = 0;
        while (i < mu.length()) {
            int run = 1;
            while (i + run < mu.length() && mu.part(i + run) == mu.part(i)) ++run;
            mults *= Rational(factorial(run));
            i += run;
        }
        out.emplace(mu, c * mults);
    }
    return out;
}

std::mutex g_tables_mutex;
std::map<int, DegreeTables> g_tables;

const DegreeTables& degree_tables(int d) {
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    auto it = g_tables.find(d);
    if (it != g_tables.end()) return it->second;

    DegreeTables t;
    t.order = enumerate_partitions(d);
    for (int i = 0; i < static_cast<int>(t.order.size()); ++i) t.index.emplace(t.order[i], i);
    t.p_to_m.resize(t.order.size());
    t.m_to_p.resize(t.order.size());
    for (std::size_t i = 0; i < t.order.size(); ++i) t.p_to_m[i] = powersum_in_monomials(t.order[i]);
    // The matrix (p in m) is triangular against the enumeration order, so the
    // inverse rows follow by forward substitution.
    for (std::size_t i = 0; i < t.order.size(); ++i) {
        const auto& row = t.p_to_m[i];
        std::map<Partition, Rational, PartitionLess> acc;
        acc.emplace(t.order[i], Rational(1));  // p_{order[i]} itself
        Rational diag;
        for (const auto& [mu, c] : row) {
            const int j = t.index.at(mu);
            if (static_cast<std::size_t>(j) == i) {
                diag = c;
                continue;
            }
            for (const auto& [nu, pc] : t.m_to_p[j]) {
                acc[nu] -= c * pc;
                if (acc[nu] == 0) acc.erase(nu);
            }
        }
        for (auto& [nu, pc] : acc) pc /= diag;
        t.m_to_p[i] = std::move(acc);
    }
    return g_tables.emplace(d, std::move(t)).first->second;
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    SymFunc out(target);
    for (const auto& [lambda, c] : f.terms()) {
        const DegreeTables& t = degree_tables(lambda.weight());
        const int i = t.index.at(lambda);
        const auto& row = (target == Basis::monomial) ? t.p_to_m[i] : t.m_to_p[i];
        for (const auto& [mu, rc] : row) out.add_term(mu, c * ThetaFunction(rc));
    }
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    const SymFunc fp = convert(f, Basis::powersum);
    const SymFunc gp = convert(g, Basis::powersum);
    SymFunc out(Basis::powersum);
    for (const auto& [lambda, fc] : fp.terms())
        for (const auto& [mu, gc] : gp.terms()) {
            std::vector<int> parts = lambda.parts();
            parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            out.add_term(Partition(std::move(parts)), fc * gc);
        }
    return out;
}

ThetaFunction scalar_product(const SymFunc& f, const SymFunc& g) {
    const SymFunc fp = convert(f, Basis::powersum);
    const SymFunc gp = convert(g, Basis::powersum);
    const ThetaFunction th = ThetaFunction::theta();
    ThetaFunction out;
    for (const auto& [lambda, fc] : fp.terms()) {
        const ThetaFunction gc = gp.coeff(lambda);
        if (gc.is_zero()) continue;
        out += fc * gc * ThetaFunction(z_lambda(lambda)) / th.pow(lambda.length());
    }
    return out;
}

namespace {

std::mutex g_jack_mutex;
std::map<Partition, SymFunc, PartitionLess> g_jack_memo;
std::map<Partition, ThetaFunction, PartitionLess> g_jack_norms;
JackStore g_jack_store;

ThetaFunction jack_norm(const Partition& lambda);

SymFunc jack_compute(const Partition& lambda) {
    SymFunc p = SymFunc::basis_element(Basis::monomial, lambda);
    for (const auto& mu : enumerate_partitions(lambda.weight())) {
        if (dominance_compare(mu, lambda) != Dominance::less) continue;
        const SymFunc& pmu = jack(mu);
        const ThetaFunction c =
            scalar_product(SymFunc::basis_element(Basis::monomial, lambda), pmu) / jack_norm(mu);
        p -= pmu.scaled(c);
    }
    return p;
}

ThetaFunction jack_norm(const Partition& lambda) {
    {
        std::lock_guard<std::mutex> lock(g_jack_mutex);
        auto it = g_jack_norms.find(lambda);
        if (it != g_jack_norms.end()) return it->second;
    }
    const SymFunc& p = jack(lambda);
    ThetaFunction norm = scalar_product(p, p);
    std::lock_guard<std::mutex> lock(g_jack_mutex);
    return g_jack_norms.emplace(lambda, std::move(norm)).first->second;
}

}  // namespace

const SymFunc& jack(const Partition& lambda) {
    JackStore store;
    {
        std::lock_guard<std::mutex> lock(g_jack_mutex);
        auto it = g_jack_memo.find(lambda);
        if (it != g_jack_memo.end()) return it->second;
        store = g_jack_store;
    }
    if (store.load) {
        if (auto cached = store.load(lambda)) {
            std::lock_guard<std::mutex> lock(g_jack_mutex);
            return g_jack_memo.emplace(lambda, std::move(*cached)).first->second;
        }
    }
    SymFunc p = jack_compute(lambda);
    if (store.save) store.save(lambda, p);
    std::lock_guard<std::mutex> lock(g_jack_mutex);
    return g_jack_memo.emplace(lambda, std::move(p)).first->second;
}

void set_jack_store(JackStore store) {
    std::lock_guard<std::mutex> lock(g_jack_mutex);
    g_jack_store = std::move(store);
}

void clear_jack_memo() {
    std::lock_guard<std::mutex> lock(g_jack_mutex);
    g_jack_memo.clear();
    g_jack_norms.clear();
}

ThetaFunction kaneko_scale(const Partition& lambda) {
    const ThetaFunction th = ThetaFunction::theta();
    ThetaFunction hooks(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i - 1); ++j) {
            const BoxStats s = arm_leg(lambda, i, j);
            hooks *= ThetaFunction(s.arm + 1) + th * s.leg;
        }
    return ThetaFunction(Rational(factorial(lambda.weight()))) / hooks;
}

SymFunc kaneko_C(const Partition& lambda) { return jack(lambda).scaled(kaneko_scale(lambda)); }

void trim_x_poly(ThetaXPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool x_poly_equal(const ThetaXPoly& a, const ThetaXPoly& b) {
    ThetaXPoly u = a, v = b;
    trim_x_poly(u);
    trim_x_poly(v);
    return u == v;
}

ThetaFunction eval_x_poly(const ThetaXPoly& p, const ThetaFunction& x) {
    ThetaFunction acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ThetaFunction eps_at(const SymFunc& f, const ThetaFunction& x) {
    const SymFunc fp = convert(f, Basis::powersum);
    ThetaFunction out;
    for (const auto& [lambda, c] : fp.terms()) out += c * x.pow(lambda.length());
    return out;
}

ThetaXPoly eps_poly(const SymFunc& f) {
    const SymFunc fp = convert(f, Basis::powersum);
    ThetaXPoly out;
    for (const auto& [lambda, c] : fp.terms()) {
        const std::size_t k = static_cast<std::size_t>(lambda.length());
        if (out.size() <= k) out.resize(k + 1);
        out[k] += c;
    }
    trim_x_poly(out);
    return out;
}

ThetaXPoly spec_formula(const Partition& lambda) {
    const ThetaFunction th = ThetaFunction::theta();
    ThetaXPoly num{ThetaFunction(1)};
    ThetaFunction den(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i - 1); ++j) {
            const BoxStats s = arm_leg(lambda, i, j);
            // multiply num by (theta X + a' - theta l')
            const ThetaFunction c0 = ThetaFunction(s.coarm) - th * s.coleg;
            ThetaXPoly next(num.size() + 1);
            for (std::size_t k = 0; k < num.size(); ++k) {
                next[k] += num[k] * c0;
                next[k + 1] += num[k] * th;
            }
            num = std::move(next);
            den *= ThetaFunction(s.arm) + th * (s.leg + 1);
        }
    for (auto& c : num) c /= den;
    trim_x_poly(num);
    return num;
}

}  // namespace superjack
