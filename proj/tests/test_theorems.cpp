#include <doctest.h>

#include "lpsign/theorems.hpp"
#include "oracles.hpp"

using namespace lpsign;

namespace {

ExactPolynomial poly(std::vector<std::string> cs) {
    std::vector<Rational> v;
    for (auto& c : cs) v.push_back(parse_rational(c));
    return ExactPolynomial::from_coefficients(std::move(v));
}

}  // namespace

TEST_CASE("thm2: pure Gaussian and simple hyperbolic factors") {
    auto r1 = thm2_n0_bound(poly({"1"}), Rational(-1), 100);
    CHECK(r1.violations.empty());
    CHECK(r1.identity_holds);
    CHECK(r1.bound_valid);
    CHECK(r1.n0_bound <= 3);

    // P = 1 - z^2: a_{2k} = (-1)^k (1/k! + 1/(k-1)!), strictly alternating.
    auto r2 = thm2_n0_bound(poly({"1", "0", "-1"}), Rational(-1), 200);
    CHECK(r2.violations.empty());
    CHECK(r2.empirical_first_clean == 0);
    CHECK(r2.identity_holds);
    // direct cross-check of the even coefficients
    auto phi = mul(gaussian_series<Rational>(Rational(-1), Rational(0), 30),
                   RationalSeries::from_coefficients({Rational(1), Rational(0), Rational(-1)}).truncated(30));
    for (std::size_t k = 1; k <= 14; ++k) {
        Rational expect = Rational(1) / Rational(factorial(k)) + Rational(1) / Rational(factorial(k - 1));
        if (k % 2 == 1) expect = -expect;
        CHECK(phi[2 * k] == expect);
    }

    auto r3 = thm2_n0_bound(poly({"1", "-3/2", "1/2"}), Rational(-1), 400);
    CHECK(r3.empirical_first_clean <= r3.n0_bound);
    CHECK(r3.identity_holds);
    CHECK(r3.bound_valid);

    CHECK_THROWS_AS(thm2_n0_bound(poly({"1", "0", "1"}), Rational(-1), 100), PreconditionError);
    CHECK_THROWS_AS(thm2_n0_bound(poly({"1", "1"}), Rational(1), 100), PreconditionError);
}

TEST_CASE("thm2: falling-factorial companions are the stated ones") {
    // P = (1-z)(1-z/2) = 1 - 3/2 z + 1/2 z^2, m = 1:
    //   P1(x) = a b_0 + b_2 x = -1 + x/2, P2(x) = b_1 = -3/2
    auto r = thm2_n0_bound(poly({"1", "-3/2", "1/2"}), Rational(-1), 50);
    CHECK(r.p1 == poly({"-1", "1/2"}));
    CHECK(r.p2 == poly({"-3/2"}));
    CHECK(r.k0 == 3);  // Cauchy bound 1 + |-1|/(1/2) = 3
    CHECK(r.n0_bound == 7);
}

TEST_CASE("thm2 battery over random hyperbolic polynomials") {
    std::uint64_t state = 99;
    for (int i = 0; i < 20; ++i) {
        auto p = random_hyperbolic(state, 6, false);
        for (Rational a : {Rational(-1), Rational(-1, 3)}) {
            auto r = thm2_n0_bound(p, a, 200);
            CHECK(r.bound_valid);
            CHECK(r.identity_holds);
        }
    }
}

TEST_CASE("thm1 hypothesis check verdicts") {
    FunctionSpec ge;
    ge.gauss_a = Rational(-1);
    ge.classical_factors.push_back(ClassicalFactor::named("exp"));
    auto s = build_function<Rational>(ge, 200);
    auto r = thm1_hypothesis_check(s, 200, 100, 200);
    CHECK(r.verdict == Thm1Report::Verdict::satisfied);
    CHECK(r.tail.violations == std::vector<std::size_t>{5, 20, 43, 78});
    CHECK(r.growth->sigma_hat > 0);

    auto e = classical_series<Rational>(ClassicalFactor::named("exp"), 200);
    auto r2 = thm1_hypothesis_check(e, 200, 100, 200);
    CHECK(r2.verdict == Thm1Report::Verdict::violated_in_tail);

    RationalSeries p(200);
    p.set(0, Rational(1));
    p.set(2, Rational(-1));
    auto r3 = thm1_hypothesis_check(p, 200, 100, 200);
    CHECK(r3.verdict == Thm1Report::Verdict::growth_outside);

    CHECK_THROWS_AS(thm1_hypothesis_check(p, 300, 100, 200), PreconditionError);
}

TEST_CASE("thm3 constructions") {
    auto c0 = thm3_construct(Rational(0), 12, 0, Thm3Base::e);
    REQUIRE(c0.spec.product_factors.size() == 1);
    CHECK(c0.spec.product_factors[0].kind == ZeroKind::exp_growth);
    CHECK_FALSE(c0.spec.is_exact());
    auto zs = c0.spec.product_factors[0].materialize_ball();
    CHECK(std::abs(zs[11].value().to_double() - std::exp(12.0)) < 1e-6);

    auto c3 = thm3_construct(Rational(0), 12, 0, Thm3Base::exact3);
    CHECK(c3.spec.is_exact());

    auto c15 = thm3_construct(Rational(3, 2), 12, 8, Thm3Base::e);
    REQUIRE(c15.spec.product_factors.size() == 2);
    CHECK(c15.spec.product_factors[0].kind == ZeroKind::power_log);
    CHECK(c15.spec.product_factors[0].genus_param == 1);
    CHECK(c15.spec.product_factors[0].count == 16);

    // rho < 1 gets a genus-0 power-log factor
    auto c05 = thm3_construct(Rational(1, 2), 6, 4, Thm3Base::e);
    CHECK(c05.spec.product_factors[0].genus_param == 0);

    CHECK_THROWS_AS(thm3_construct(Rational(3), 12, 8, Thm3Base::e), PreconditionError);
    CHECK_THROWS_AS(thm3_construct(Rational(-1, 2), 12, 8, Thm3Base::e), PreconditionError);

    // once the Gaussian factor is attached the spec classifies as LPa
    FunctionSpec with_gauss = c15.spec;
    with_gauss.gauss_a = Rational(-1);
    CHECK(classify_subclass(with_gauss) == Subclass::LPa);
}

TEST_CASE("thm3 violations: golden indices (exact surrogate)") {
    // Fully exact run: the violation set over horizon 400 is decidable in
    // rational arithmetic, no tolerances involved.
    auto c = thm3_construct(Rational(0), 12, 0, Thm3Base::exact3);
    auto t = thm2_horizon_guard_unused_placeholder_disabled ? TailReport{} : thm3_violations(c, Rational(-1), 400);
    CHECK(t.violations == std::vector<std::size_t>{33});
    CHECK(t.indeterminate_indices.empty());

    auto t2 = thm3_violations(c, Rational(-1, 2), 400);
    CHECK(t2.violations == std::vector<std::size_t>{17, 212});

    // horizon too short to exhibit anything
    auto t3 = thm3_violations(c, Rational(-1), 3);
    CHECK(t3.violations.empty());
}

TEST_CASE("thm3 violations: enclosure-based zeros") {
    auto c = thm3_construct(Rational(0), 12, 0, Thm3Base::e);
    auto t = thm3_violations(c, Rational(-1), 300);
    CHECK(t.violations == std::vector<std::size_t>{23, 248});
    CHECK(t.indeterminate_indices.empty());

    auto t2 = thm3_violations(c, Rational(-1, 2), 300);
    CHECK(t2.violations == std::vector<std::size_t>{11, 124});
}

TEST_CASE("corollary 1: even and odd specs have no exceptional n0") {
    FunctionSpec even;
    even.gauss_a = Rational(-1);
    even.product_factors.push_back(ZeroSequence::explicit_zeros({Rational(2), Rational(-2)}));
    auto r = corollary1_verify(even, 200);
    CHECK(r.parity == "even");
    CHECK(r.zero_violations);
    CHECK(r.statistic_in_window);

    FunctionSpec odd;
    odd.gauss_a = Rational(-1);
    odd.monomial_power = 1;
    auto r2 = corollary1_verify(odd, 200);
    CHECK(r2.parity == "odd");
    CHECK(r2.zero_violations);

    FunctionSpec pure;
    pure.gauss_a = Rational(-1);
    auto r3 = corollary1_verify(pure, 200);
    CHECK(r3.zero_violations);
    double max_q2 = 0;
    for (auto& [n, v] : r3.growth.raw_q2_samples) max_q2 = std::max(max_q2, v);
    CHECK(max_q2 == doctest::Approx(2 * std::exp(1.0)).epsilon(0.03));

    FunctionSpec not_even;
    not_even.gauss_a = Rational(-1);
    not_even.product_factors.push_back(ZeroSequence::explicit_zeros({Rational(2)}));
    CHECK_THROWS_AS(corollary1_verify(not_even, 200), PreconditionError);

    FunctionSpec no_gauss;
    no_gauss.product_factors.push_back(ZeroSequence::explicit_zeros({Rational(2), Rational(-2)}));
    CHECK_THROWS_AS(corollary1_verify(no_gauss, 200), PreconditionError);
}
