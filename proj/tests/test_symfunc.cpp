#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <thread>

#include <superjack/symfunc.hpp>

using namespace superjack;

namespace {

ThetaFunction tf(const std::string& s) { return parse_theta_function(s); }
ThetaFunction th() { return ThetaFunction::theta(); }

SymFunc m_(const Partition& p) { return SymFunc::basis_element(Basis::monomial, p); }
SymFunc p_(const Partition& p) { return SymFunc::basis_element(Basis::powersum, p); }

SymFunc random_symfunc(std::mt19937_64& rng, int max_weight) {
    SymFunc f(Basis::powersum);
    const int nterms = 1 + rng() % 3;
    for (int t = 0; t < nterms; ++t) {
        const auto parts = enumerate_partitions(1 + rng() % max_weight);
        ThetaFunction c(static_cast<int>(rng() % 7) - 3);
        if (rng() % 3 == 0) c += th();
        f.add_term(parts[rng() % parts.size()], c);
    }
    return f;
}

}  // namespace

TEST_CASE("basis conversion") {
    CHECK(convert(p_({2}), Basis::monomial) == m_({2}));

    SymFunc expected(Basis::powersum);
    expected.add_term(Partition{1, 1}, tf("1/2"));
    expected.add_term(Partition{2}, tf("-1/2"));
    CHECK(convert(m_({1, 1}), Basis::powersum) == expected);

    SymFunc p11(Basis::monomial);
    p11.add_term(Partition{2}, ThetaFunction(1));
    p11.add_term(Partition{1, 1}, ThetaFunction(2));
    CHECK(convert(p_({1, 1}), Basis::monomial) == p11);
}

TEST_CASE("conversion round trips on random elements") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const SymFunc f = random_symfunc(rng, 5);
        CHECK(convert(convert(f, Basis::monomial), Basis::powersum) == f);
        const SymFunc g = convert(f, Basis::monomial);
        CHECK(convert(convert(g, Basis::powersum), Basis::monomial) == g);
    }
}

TEST_CASE("multiplication") {
    CHECK(multiply(p_({1}), p_({1})) == p_({1, 1}));
    CHECK(multiply(p_({2}), p_({1, 1})) == p_({2, 1, 1}));

    SymFunc expected(Basis::monomial);
    expected.add_term(Partition{2}, ThetaFunction(1));
    expected.add_term(Partition{1, 1}, ThetaFunction(2));
    CHECK(convert(multiply(m_({1}), m_({1})), Basis::monomial) == expected);
}

TEST_CASE("scalar product") {
    CHECK(scalar_product(p_({2}), p_({2})) == tf("2/theta"));
    CHECK(scalar_product(p_({1, 1}), p_({1, 1})) == tf("2/theta^2"));
    CHECK(scalar_product(p_({2}), p_({1, 1})).is_zero());
    // different degrees pair to zero
    CHECK(scalar_product(p_({3}), p_({2})).is_zero());
    CHECK(scalar_product(m_({2, 1}), m_({1, 1})).is_zero());
}

TEST_CASE("jack polynomials at low weight") {
    CHECK(jack(Partition{1, 1}) == m_({1, 1}));
    CHECK(jack(Partition{1}) == m_({1}));
    CHECK(jack(Partition()) == SymFunc::unit(Basis::monomial));

    SymFunc p2(Basis::monomial);
    p2.add_term(Partition{2}, ThetaFunction(1));
    p2.add_term(Partition{1, 1}, tf("(2*theta)/(theta+1)"));
    CHECK(jack(Partition{2}) == p2);

    // power-sum form (p_2 + theta p_1^2)/(1+theta)
    SymFunc p2_powersum(Basis::powersum);
    p2_powersum.add_term(Partition{2}, tf("1/(theta+1)"));
    p2_powersum.add_term(Partition{1, 1}, tf("theta/(theta+1)"));
    CHECK(convert(jack(Partition{2}), Basis::powersum) == p2_powersum);
}

TEST_CASE("jack triangularity, orthogonality and norms to weight 5") {
    for (int d = 0; d <= 5; ++d) {
        const auto labels = enumerate_partitions(d);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const SymFunc pi = jack(labels[i]);
            CHECK(pi.coeff(labels[i]).is_one());
            for (const auto& [mu, c] : pi.terms())
                if (!(mu == labels[i])) CHECK(dominance_compare(mu, labels[i]) == Dominance::less);
            CHECK((scalar_product(pi, pi) * b_lambda(labels[i])).is_one());
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                CHECK(scalar_product(pi, jack(labels[j])).is_zero());
        }
    }
}

TEST_CASE("kaneko normalisation") {
    CHECK(convert(kaneko_C(Partition{1}), Basis::powersum) == p_({1}));
    CHECK(kaneko_C(Partition{2}) == jack(Partition{2}));

    SymFunc expected(Basis::monomial);
    expected.add_term(Partition{1, 1}, tf("2/(theta+1)"));
    CHECK(kaneko_C(Partition{1, 1}) == expected);
}

TEST_CASE("kaneko sum rule") {
    for (int k = 0; k <= 4; ++k) {
        SymFunc sum(Basis::powersum);
        for (const auto& lambda : enumerate_partitions(k)) sum += convert(kaneko_C(lambda), Basis::powersum);
        CHECK(sum == p_(Partition(std::vector<int>(k, 1))));
    }
}

TEST_CASE("eps substitution") {
    CHECK(eps_poly(p_({2, 1})) == (ThetaXPoly{ThetaFunction(0), ThetaFunction(0), ThetaFunction(1)}));
    CHECK(eps_at(p_({2, 1}), th()) == th() * th());
    CHECK(x_poly_equal(eps_poly(jack(Partition{1})), ThetaXPoly{ThetaFunction(0), ThetaFunction(1)}));

    // eps_X(P_(2)) = X (theta X + 1) / (1 + theta)
    const ThetaXPoly p2 = eps_poly(jack(Partition{2}));
    CHECK(x_poly_equal(p2, ThetaXPoly{ThetaFunction(0), tf("1/(theta+1)"), tf("theta/(theta+1)")}));
}

TEST_CASE("specialisation formula") {
    CHECK(x_poly_equal(spec_formula(Partition{1}), ThetaXPoly{ThetaFunction(0), ThetaFunction(1)}));
    CHECK(x_poly_equal(spec_formula(Partition{2}),
                       ThetaXPoly{ThetaFunction(0), tf("1/(theta+1)"), tf("theta/(theta+1)")}));
    // oracle: eps of the Gram-Schmidt output, here X(X-1)/2 for (1,1)
    CHECK(x_poly_equal(spec_formula(Partition{1, 1}), eps_poly(jack(Partition{1, 1}))));
    for (int d = 0; d <= 5; ++d)
        for (const auto& lambda : enumerate_partitions(d))
            CHECK(x_poly_equal(eps_poly(jack(lambda)), spec_formula(lambda)));
}

TEST_CASE("jack memo tolerates concurrent readers") {
    clear_jack_memo();
    const auto labels = enumerate_partitions(5);
    std::vector<std::vector<SymFunc>> results(4);
    {
        std::vector<std::thread> workers;
        for (auto& slot : results)
            workers.emplace_back([&slot, &labels] {
                for (const auto& lambda : labels) slot.push_back(jack(lambda));
            });
        for (auto& w : workers) w.join();
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (const auto& slot : results) CHECK(slot[i] == jack(labels[i]));
    clear_jack_memo();
}

TEST_CASE("jack memo accepts an external store") {
    clear_jack_memo();
    std::map<std::string, SymFunc> storage;
    int loads = 0, saves = 0;
    JackStore store;
    store.load = [&](const Partition& lambda) -> std::optional<SymFunc> {
        ++loads;
        auto it = storage.find(to_string(lambda));
        if (it == storage.end()) return std::nullopt;
        return it->second;
    };
    store.save = [&](const Partition& lambda, const SymFunc& f) {
        ++saves;
        storage.emplace(to_string(lambda), f);
    };
    set_jack_store(store);

    const SymFunc first = jack(Partition{2});
    CHECK(saves >= 1);
    CHECK(storage.count("2") == 1);

    clear_jack_memo();
    const SymFunc second = jack(Partition{2});
    CHECK(loads >= 2);
    CHECK(first == second);

    set_jack_store(JackStore{});
    clear_jack_memo();
}
