#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <superjack/error.hpp>
#include <superjack/operators.hpp>

using namespace superjack;

namespace {

ThetaFunction tf(const std::string& s) { return parse_theta_function(s); }
ThetaFunction th() { return ThetaFunction::theta(); }

SymFunc p_(const Partition& p) { return SymFunc::basis_element(Basis::powersum, p); }
MPoly var(int n, int m, int idx) { return MPoly::variable(n, m, idx); }

// Independent oracles, written from the displayed second-order operators
// rather than the recursion.

// sum_i d^2/dx_i^2 + 2 theta sum_{i<j} (d_i - d_j)/(x_i - x_j), m = 0
MPoly rational_cms_direct(const MPoly& p) {
    MPoly out(p.n(), 0);
    for (int i = 0; i < p.n(); ++i) out += p.derivative(i).derivative(i);
    for (int i = 0; i < p.n(); ++i)
        for (int j = i + 1; j < p.n(); ++j)
            out += divided_difference(p.derivative(i) - p.derivative(j), i, j).scaled(th() * 2);
    return out;
}

// the two-block second-order deformed operator
MPoly deformed_cms_direct(const MPoly& p) {
    auto parity = [&](int i) { return i < p.n() ? ThetaFunction(1) : -th(); };
    MPoly out(p.n(), p.m());
    const int v = p.vars();
    for (int i = 0; i < v; ++i) out += p.derivative(i).derivative(i).scaled(parity(i));
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) {
            const int e = 1 - (i < p.n() ? 0 : 1) - (j < p.n() ? 0 : 1);
            const ThetaFunction cross =  // (-theta)^{1-p(i)-p(j)}
                e == 1 ? -th() : (e == 0 ? ThetaFunction(1) : (-th()).inverse());
            const MPoly combo = p.derivative(i).scaled(parity(i)) - p.derivative(j).scaled(parity(j));
            out -= divided_difference(combo, i, j).scaled(cross * 2);
        }
    return out;
}

MPoly euler_apply(const MPoly& p) {
    MPoly out(p.n(), p.m());
    for (int i = 0; i < p.vars(); ++i) out += MPoly::variable(p.n(), p.m(), i) * p.derivative(i);
    return out;
}

MPoly random_lambda_element(std::mt19937_64& rng, int n, int m, int max_weight) {
    SymFunc f(Basis::powersum);
    for (int t = 0; t < 2; ++t) {
        const auto parts = enumerate_partitions(1 + rng() % max_weight);
        f.add_term(parts[rng() % parts.size()], ThetaFunction(1 + static_cast<int>(rng() % 4)));
    }
    return phi(f, n, m).poly;
}

MPoly random_symmetric(std::mt19937_64& rng, int nvars, int max_weight) {
    return random_lambda_element(rng, nvars, 0, max_weight);
}

}  // namespace

TEST_CASE("divided difference") {
    const MPoly x1 = var(2, 0, 0), x2 = var(2, 0, 1);
    CHECK(divided_difference(x1 * x1 - x2 * x2, 0, 1) == x1 + x2);
    CHECK(divided_difference(x1 - x2, 0, 1) == MPoly::constant(2, 0, ThetaFunction(1)));
    try {
        divided_difference(x1 + x2, 0, 1);
        FAIL("expected error");
    } catch (const error& e) {
        CHECK(e.code() == errc::nonzero_remainder);
    }
}

TEST_CASE("dunkl operator") {
    const MPoly x1 = var(2, 0, 0), x2 = var(2, 0, 1);
    CHECK(dunkl_apply(x1, 0) == MPoly::constant(2, 0, ThetaFunction(1) + th()));
    CHECK(dunkl_apply(x1 * x1, 0) == x1.scaled(ThetaFunction(2)) + (x1 + x2).scaled(th()));
    CHECK(dunkl_apply(MPoly::constant(2, 0, ThetaFunction(1)), 0).is_zero());
}

TEST_CASE("dunkl operators commute") {
    std::mt19937_64 rng(23);
    for (int nvars = 2; nvars <= 3; ++nvars)
        for (int rep = 0; rep < 5; ++rep) {
            MPoly p(nvars, 0);
            for (int t = 0; t < 4; ++t) {
                std::vector<int> e(nvars, 0);
                int budget = static_cast<int>(rng() % 5);
                for (int v = 0; v < nvars && budget > 0; ++v) {
                    e[v] = static_cast<int>(rng() % (budget + 1));
                    budget -= e[v];
                }
                p.add_term(e, ThetaFunction(1 + static_cast<int>(rng() % 5)));
            }
            for (int i = 0; i < nvars; ++i)
                for (int j = i + 1; j < nvars; ++j)
                    CHECK(dunkl_apply(dunkl_apply(p, i), j) == dunkl_apply(dunkl_apply(p, j), i));
        }
}

TEST_CASE("symmetric quantum integrals") {
    const MPoly x1 = var(2, 0, 0), x2 = var(2, 0, 1);
    const MPoly p = x1 * x1 + x2 * x2;
    CHECK(symmetric_integral_apply(p_({2}), p) == MPoly::constant(2, 0, tf("4*theta+4")));
    CHECK(symmetric_integral_apply(p_({1}), x1 + x2) == MPoly::constant(2, 0, ThetaFunction(2)));
    CHECK(symmetric_integral_apply(p_({1}), MPoly::constant(3, 0, ThetaFunction(1))).is_zero());
    try {
        symmetric_integral_apply(p_({1}), x1);
        FAIL("expected error");
    } catch (const error& e) {
        CHECK(e.code() == errc::asymmetric_input);
    }
}

TEST_CASE("Res p_2(D) agrees with the displayed second-order operator") {
    std::mt19937_64 rng(31);
    for (int nvars = 2; nvars <= 3; ++nvars)
        for (int rep = 0; rep < 5; ++rep) {
            const MPoly p = random_symmetric(rng, nvars, 4);
            CHECK(symmetric_integral_apply(p_({2}), p) == rational_cms_direct(p));
        }
}

TEST_CASE("symmetric integrals preserve symmetry") {
    std::mt19937_64 rng(59);
    for (int nvars = 2; nvars <= 3; ++nvars)
        for (int rep = 0; rep < 4; ++rep) {
            const MPoly p = random_symmetric(rng, nvars, 4);
            for (const auto& f : {p_({1}), p_({2}), p_({2, 1})})
                CHECK(symmetric_integral_apply(f, p).is_symmetric_in_x());
        }
}

TEST_CASE("first-order deformed partials carry the parity factor") {
    const MPoly p = phi(p_({1}), 1, 1).poly;  // x - y/theta
    CHECK(deformed_partial_apply(p, 0, 1) == MPoly::constant(1, 1, ThetaFunction(1)));
    CHECK(deformed_partial_apply(p, 1, 1) == MPoly::constant(1, 1, ThetaFunction(1)));
}

TEST_CASE("deformed integrals") {
    const MPoly p1 = phi(p_({1}), 1, 1).poly;
    CHECK(deformed_integral_apply(p1, 1) == MPoly::constant(1, 1, tf("(theta-1)/theta")));

    const MPoly sp2 = super_jack(Partition{2}, 1, 1).poly;
    CHECK(deformed_integral_apply(sp2, 2) == MPoly::constant(1, 1, tf("(2*theta-2)/(theta+1)")));
    CHECK(deformed_integral_apply(MPoly::constant(1, 1, ThetaFunction(1)), 2).is_zero());
}

TEST_CASE("order-2 recursion matches the displayed deformed operator") {
    for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}})
        for (int d = 0; d <= 4; ++d)
            for (const auto& lambda : enumerate_partitions(d, n, m)) {
                const MPoly sp = super_jack(lambda, n, m).poly;
                CHECK(deformed_integral_apply(sp, 2) == deformed_cms_direct(sp));
            }
}

TEST_CASE("deformed integrals reduce to Res p_r(D) at m = 0") {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 4; ++rep) {
        const MPoly p = random_symmetric(rng, 2 + rep % 2, 4);
        for (int r = 1; r <= 3; ++r)
            CHECK(deformed_integral_apply(p, r) == symmetric_integral_apply(p_(Partition{r}), p));
    }
}

TEST_CASE("deformed integrals commute on super-Jack polynomials") {
    for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}})
        for (int d = 0; d <= 4; ++d)
            for (const auto& lambda : enumerate_partitions(d, n, m)) {
                const MPoly sp = super_jack(lambda, n, m).poly;
                for (int r = 1; r <= 3; ++r)
                    for (int s = r + 1; s <= 3; ++s)
                        CHECK(deformed_integral_apply(deformed_integral_apply(sp, s), r) ==
                              deformed_integral_apply(deformed_integral_apply(sp, r), s));
            }
}

TEST_CASE("deformed recursion rejects inputs outside the algebra") {
    try {
        deformed_integral_apply(var(1, 1, 0), 2);  // plain x is not quasi-invariant
        FAIL("expected error");
    } catch (const error& e) {
        CHECK(e.code() == errc::nonzero_remainder);
    }
}

TEST_CASE("quantum integrals for composite symmetric functions") {
    const MPoly sp1 = super_jack(Partition{1}, 1, 1).poly;
    const MPoly sp2 = super_jack(Partition{2}, 1, 1).poly;
    CHECK(quantum_integral_apply(p_({1}), sp1) == MPoly::constant(1, 1, tf("(theta-1)/theta")));
    CHECK(quantum_integral_apply(p_({1, 1}), sp2) == MPoly::constant(1, 1, tf("(2*theta-2)/(theta+1)")));
    CHECK(quantum_integral_apply(convert(jack(Partition{2}), Basis::powersum), sp2) ==
          MPoly::constant(1, 1, tf("(2*theta-2)/(theta+1)")));
}

TEST_CASE("first trigonometric integral is the Euler operator") {
    const MPoly sp2 = super_jack(Partition{2}, 1, 1).poly;
    CHECK(trig_integral_apply(sp2, 1) == sp2.scaled(ThetaFunction(2)));
    const MPoly sp1 = super_jack(Partition{1}, 1, 1).poly;
    CHECK(trig_integral_apply(sp1, 1) == sp1);

    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 5; ++rep) {
        const MPoly p = random_lambda_element(rng, 2, 1, 3);
        CHECK(trig_integral_apply(p, 1) == euler_apply(p));
    }
}

TEST_CASE("trigonometric eigenvalues") {
    SUBCASE("order 1 gives the weight") {
        CHECK(trig_eigenvalue(Partition{2}, 1, 1, 1) == ThetaFunction(2));
        CHECK(trig_eigenvalue(Partition{1, 1}, 1, 1, 1) == ThetaFunction(2));
        for (int d = 1; d <= 4; ++d)
            for (const auto& lambda : enumerate_partitions(d, 2, 1))
                CHECK(trig_eigenvalue(lambda, 1, 2, 1) == ThetaFunction(d));
    }
    SUBCASE("regression values, (n,m) = (1,1)") {
        CHECK(trig_eigenvalue(Partition{1}, 2, 1, 1).is_zero());
        CHECK(trig_eigenvalue(Partition{2}, 2, 1, 1) == ThetaFunction(2));
        CHECK(trig_eigenvalue(Partition{1, 1}, 2, 1, 1) == tf("-2*theta"));
        CHECK(trig_eigenvalue(Partition{1}, 3, 1, 1) == tf("1/2*theta"));
        CHECK(trig_eigenvalue(Partition{2}, 3, 1, 1) == tf("theta+3"));
        CHECK(trig_eigenvalue(Partition{1, 1}, 3, 1, 1) == tf("3*theta^2+theta"));
    }
    SUBCASE("regression values, (n,m) = (2,1)") {
        CHECK(trig_eigenvalue(Partition{1}, 2, 2, 1) == th());
        CHECK(trig_eigenvalue(Partition{2, 1}, 2, 2, 1) == tf("theta+2"));
        CHECK(trig_eigenvalue(Partition{2, 1}, 3, 2, 1) == tf("6*theta+3"));
    }
    SUBCASE("order 2 at m = 0 matches the classical eigenvalue") {
        for (int n = 2; n <= 3; ++n)
            for (int d = 1; d <= 4; ++d)
                for (const auto& lambda : enumerate_partitions(d, n, 0)) {
                    ThetaFunction expected;
                    for (int i = 1; i <= lambda.length(); ++i) {
                        const int li = lambda.part(i - 1);
                        expected += ThetaFunction(li * li) + th() * ThetaFunction(li * (n + 1 - 2 * i));
                    }
                    CHECK(trig_eigenvalue(lambda, 2, n, 0) == expected);
                }
    }
    SUBCASE("kernel labels are rejected") {
        CHECK_THROWS_AS(trig_eigenvalue(Partition{2, 2}, 1, 1, 1), error);
    }
    SUBCASE("joint eigenfunctions across all three small spaces") {
        // trig_eigenvalue already verifies proportionality on every term
        for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}})
            for (int d = 1; d <= 4; ++d)
                for (const auto& lambda : enumerate_partitions(d, n, m))
                    for (int r = 1; r <= 3; ++r) CHECK(!trig_eigenvalue(lambda, r, n, m).den().is_zero());
    }
}

TEST_CASE("truncated exponential of the lowering operator") {
    const MPoly sp1 = super_jack(Partition{1}, 1, 1).poly;
    CHECK(exp_half_L(sp1, ExpSign::minus) == sp1);

    const MPoly sp2 = super_jack(Partition{2}, 1, 1).poly;
    CHECK(exp_half_L(sp2, ExpSign::minus) ==
          sp2 - MPoly::constant(1, 1, tf("(theta-1)/(theta+1)")));

    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 6; ++rep) {
        const MPoly p = random_lambda_element(rng, 1 + rep % 2, 1, 4);
        CHECK(exp_half_L(exp_half_L(p, ExpSign::minus), ExpSign::plus) == p);
    }
}

TEST_CASE("super-Hermite polynomials") {
    CHECK(super_hermite(Partition{1}, 1, 1) == super_jack(Partition{1}, 1, 1).poly);
    const MPoly x = var(1, 1, 0), y = var(1, 1, 1);
    CHECK(super_hermite(Partition{2}, 1, 1) ==
          x * x - (x * y).scaled(tf("2/(theta+1)")) - MPoly::constant(1, 1, tf("(theta-1)/(theta+1)")));

    const MPoly sp11 = super_jack(Partition{1, 1}, 1, 1).poly;
    CHECK(super_hermite(Partition{1, 1}, 1, 1) ==
          sp11 - deformed_cms_direct(sp11).scaled(tf("1/2")));

    CHECK_THROWS_AS(super_hermite(Partition{2, 2}, 1, 1), error);
}

TEST_CASE("harmonic integrals") {
    const MPoly sh2 = super_hermite(Partition{2}, 1, 1);
    CHECK(harmonic_integral_apply(sh2, 1, HarmonicMode::conjugation) == sh2.scaled(ThetaFunction(2)));
    CHECK(harmonic_integral_apply(MPoly::constant(1, 1, ThetaFunction(1)), 1, HarmonicMode::commutator)
              .is_zero());

    const MPoly sh1 = super_hermite(Partition{1}, 1, 1);
    CHECK(harmonic_integral_apply(sh1, 2, HarmonicMode::conjugation) ==
          harmonic_integral_apply(sh1, 2, HarmonicMode::commutator));

    SUBCASE("order 1 is Euler minus the lowering operator") {
        std::mt19937_64 rng(47);
        for (int rep = 0; rep < 5; ++rep) {
            const MPoly p = random_lambda_element(rng, 2, 1, 4);
            const MPoly expected = euler_apply(p) - deformed_integral_apply(p, 2);
            CHECK(harmonic_integral_apply(p, 1, HarmonicMode::conjugation) == expected);
            CHECK(harmonic_integral_apply(p, 1, HarmonicMode::commutator) == expected);
        }
    }
}

TEST_CASE("intertwining of trigonometric and harmonic integrals") {
    for (int d = 0; d <= 3; ++d)
        for (const auto& lambda : enumerate_partitions(d, 1, 1)) {
            const MPoly sp = super_jack(lambda, 1, 1).poly;
            const MPoly sh = super_hermite(lambda, 1, 1);
            for (int r = 1; r <= 2; ++r) {
                CHECK(exp_half_L(trig_integral_apply(sp, r), ExpSign::minus) ==
                      harmonic_integral_apply(sh, r, HarmonicMode::conjugation));
                CHECK(harmonic_integral_apply(sh, r, HarmonicMode::conjugation) ==
                      sh.scaled(trig_eigenvalue(lambda, r, 1, 1)));
            }
        }
}

TEST_CASE("the lowering operator is homogeneous of degree -2") {
    for (int d = 2; d <= 4; ++d)
        for (const auto& lambda : enumerate_partitions(d, 2, 1)) {
            const MPoly image = deformed_integral_apply(super_jack(lambda, 2, 1).poly, 2);
            for (const auto& [e, c] : image.terms()) {
                int deg = 0;
                for (int k : e) deg += k;
                CHECK(deg == d - 2);
            }
        }
}

TEST_CASE("operator requests dispatch to the right actions") {
    OperatorRequest req;
    req.kind = OperatorRequest::Kind::dunkl;
    req.index = 0;
    const MPoly x1 = var(2, 0, 0);
    CHECK(apply_operator(req, x1) == dunkl_apply(x1, 0));

    req = OperatorRequest{};
    req.kind = OperatorRequest::Kind::deformed_trig;
    req.order = 2;
    const MPoly sp2 = super_jack(Partition{2}, 1, 1).poly;
    CHECK(apply_operator(req, sp2) == trig_integral_apply(sp2, 2));

    req = OperatorRequest{};
    req.kind = OperatorRequest::Kind::exp_half_L;
    CHECK(apply_operator(req, sp2) == exp_half_L(sp2, ExpSign::minus));

    req = OperatorRequest{};
    req.kind = OperatorRequest::Kind::deformed_rational;
    req.datum = p_({1, 1});
    CHECK(apply_operator(req, sp2) == quantum_integral_apply(p_({1, 1}), sp2));
}
