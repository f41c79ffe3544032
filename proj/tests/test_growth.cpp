#include <doctest.h>

#include <cmath>

#include "lpsign/functions.hpp"
#include "lpsign/growth.hpp"

using namespace lpsign;

namespace {

RationalSeries exp_series(std::size_t order) {
    return classical_series<Rational>(ClassicalFactor::named("exp"), order);
}

}  // namespace

TEST_CASE("order estimate: raw windowed max and Stirling fit") {
    auto s = exp_series(200);
    auto est = order_estimate(s, 50, 200);
    // raw max formula carries a 1/(1 - 1/log n) finite-size bias
    CHECK(est.rho_hat == doctest::Approx(1.3173767).epsilon(1e-4));
    // the fitted estimate removes it
    CHECK(est.rho_hat_fit == doctest::Approx(1.0).epsilon(0.02));
    CHECK(est.order_samples.size() == 151);

    auto g = gaussian_series<Rational>(Rational(-1), Rational(0), 400);
    auto est2 = order_estimate(g, 100, 400);
    CHECK(est2.rho_hat == doctest::Approx(3.1015891).epsilon(1e-4));
    CHECK(est2.rho_hat_fit == doctest::Approx(2.0).epsilon(0.02));
    // structural zeros at odd indices are skipped
    CHECK(est2.order_samples.size() == 151);

    // polynomial: all tail coefficients zero
    RationalSeries p(50);
    p.set(0, Rational(1));
    p.set(3, Rational(-2));
    CHECK_THROWS_AS(order_estimate(p, 10, 50), PreconditionError);
    CHECK_THROWS_AS(order_estimate(s, 0, 10), PreconditionError);
    CHECK_THROWS_AS(order_estimate(s, 10, 500), PreconditionError);
}

TEST_CASE("type statistic: Question-A window") {
    auto g = gaussian_series<Rational>(Rational(-1), Rational(0), 400);
    auto est = type_statistic(g, 2.0, 100, 400);
    // max n |a_n|^(2/n) = 5.3404..., i.e. sigma_hat = max / (2e) close to |a| = 1
    CHECK(est.sigma_hat == doctest::Approx(0.982316).epsilon(1e-4));
    CHECK(est.sigma_hat == doctest::Approx(1.0).epsilon(0.02));
    REQUIRE(!est.raw_q2_samples.empty());
    double max_q2 = 0;
    for (auto& [n, v] : est.raw_q2_samples) max_q2 = std::max(max_q2, v);
    CHECK(max_q2 == doctest::Approx(5.3404217).epsilon(1e-4));

    auto h = gaussian_series<Rational>(Rational(-1), Rational(1), 400);
    auto est2 = type_statistic(h, 2.0, 100, 400);
    CHECK(est2.sigma_hat == doctest::Approx(1.0).epsilon(0.03));

    RationalSeries zero(100);
    CHECK_THROWS_AS(type_statistic(zero, 2.0, 10, 100), PreconditionError);
    CHECK_THROWS_AS(type_statistic(g, 0.0, 100, 400), PreconditionError);
}

TEST_CASE("Lemma 1 consistency at truncation scale") {
    // Known LPa specs: the fitted order lands within 5% of 2 and the type
    // statistic is finite and positive; the raw maximum approaches from above
    // as the window widens.
    std::vector<FunctionSpec> specs(2);
    specs[0].gauss_a = Rational(-1);
    specs[1].gauss_a = Rational(-1, 2);
    specs[1].product_factors.push_back(ZeroSequence::explicit_zeros({Rational(1), Rational(-4)}));
    for (const auto& spec : specs) {
        auto s = build_function<Rational>(spec, 400);
        auto est = order_estimate(s, 100, 400);
        CHECK(std::fabs(est.rho_hat_fit - 2.0) / 2.0 < 0.05);
        auto t = type_statistic(s, 2.0, 200, 400);
        CHECK(t.sigma_hat > 0);
        CHECK(std::isfinite(t.sigma_hat));
        double raw_narrow = order_estimate(s, 100, 200).rho_hat;
        double raw_wide = order_estimate(s, 200, 400).rho_hat;
        CHECK(raw_wide < raw_narrow);  // decreasing toward the true order
        CHECK(raw_wide > 2.0);
    }
}

TEST_CASE("Borel consistency: truncated canonical product order trend") {
    // Needs count >> window so truncation effects stay out of the window.
    auto pl = ZeroSequence::power_log(Rational(3, 2), 2000, 1);
    auto s = canonical_product_series<Ball>(pl, 120);
    double e1 = order_estimate(s, 16, 40).rho_hat;
    double e2 = order_estimate(s, 40, 80).rho_hat;
    double e3 = order_estimate(s, 80, 120).rho_hat;
    CHECK(e1 > e2);
    CHECK(e2 > e3);
    CHECK(e3 > 1.5 * 0.97);
    CHECK(std::fabs(e3 - 1.5) / 1.5 < 0.15);
}

TEST_CASE("category order is lexicographic") {
    Category a{2, 1}, b{1, 5}, c{2, 3};
    CHECK(category_max(a, b).order == 2);
    CHECK(category_max(a, b).type == 1);
    CHECK(category_max(a, c).type == 3);
    CHECK(category_max(a, a).order == a.order);

    // associative, commutative, idempotent on a small grid
    std::vector<Category> grid;
    for (double o : {0.0, 1.0, 2.0, std::numeric_limits<double>::infinity()})
        for (double t : {0.0, 0.5, std::numeric_limits<double>::infinity()}) grid.push_back({o, t});
    auto eq = [](const Category& x, const Category& y) {
        return x.order == y.order && x.type == y.type;
    };
    for (auto& x : grid)
        for (auto& y : grid) {
            CHECK(eq(category_max(x, y), category_max(y, x)));
            for (auto& z : grid)
                CHECK(eq(category_max(category_max(x, y), z), category_max(x, category_max(y, z))));
        }
}

TEST_CASE("exponent of convergence and genus closed forms") {
    auto e_seq = ZeroSequence::exponential(Rational(1), std::nullopt, 12);
    auto r1 = exponent_and_genus(e_seq);
    CHECK(r1.lambda_conv == 0.0);
    CHECK(r1.genus == 0);
    CHECK(r1.genus_partial_sum > 0);

    auto pl = ZeroSequence::power_log(Rational(3, 2), 8, 1);
    auto r2 = exponent_and_genus(pl);
    CHECK(r2.lambda_conv == doctest::Approx(1.5));
    CHECK(r2.genus == 1);

    auto expl = ZeroSequence::explicit_zeros({Rational(1), Rational(-2)});
    auto r3 = exponent_and_genus(expl);
    CHECK(r3.lambda_conv == 0.0);
    CHECK(r3.genus == 0);

    auto arith = ZeroSequence::arithmetic(Rational(1), 50);
    auto r4 = exponent_and_genus(arith);
    CHECK(r4.lambda_conv == 1.0);
    CHECK(r4.genus == 1);

    // rho = 2 boundary: the genus rule honestly reports 2
    auto pl2 = ZeroSequence::power_log(Rational(2), 8, 1);
    CHECK(exponent_and_genus(pl2).genus == 2);
}

TEST_CASE("superior density sample curves") {
    auto arith = ZeroSequence::arithmetic(Rational(1), 120);
    std::vector<double> radii;
    for (int r = 10; r <= 100; r += 10) radii.push_back(r);
    auto rep = superior_density_estimate(arith, 1.0, radii);
    CHECK(rep.delta_hat == doctest::Approx(1.0).epsilon(0.01));

    auto pl2 = ZeroSequence::power_log(Rational(2), 400, 1);
    std::vector<double> radii2{3, 6, 9, 12, 15, 18, 21, 24};
    auto rep2 = superior_density_estimate(pl2, 2.0, radii2);
    for (std::size_t i = 1; i < rep2.delta_samples.size(); ++i)
        CHECK(rep2.delta_samples[i].second <= rep2.delta_samples[i - 1].second * 1.05);

    auto empty = ZeroSequence::explicit_zeros({});
    CHECK(superior_density_estimate(empty, 1.0, radii).delta_hat == 0.0);

    CHECK_THROWS_AS(superior_density_estimate(arith, 1.0, std::vector<double>{5, 5}),
                    PreconditionError);
}

TEST_CASE("Lindelof delta sums") {
    auto zs = ZeroSequence::explicit_zeros({Rational(1), Rational(-1), Rational(2), Rational(-2)}, 1);
    CHECK(lindelof_delta(zs, 2, 0.0, 3.0) == doctest::Approx(1.25));
    CHECK(lindelof_delta(zs, 2, 0.0, 0.5) == doctest::Approx(0.0));
    auto pm1 = ZeroSequence::explicit_zeros({Rational(1), Rational(-1)});
    CHECK(lindelof_delta(pm1, 1, 0.0, 2.0) == doctest::Approx(0.0));
    CHECK(lindelof_delta(pm1, 1, 0.75, 2.0) == doctest::Approx(0.75));
    CHECK_THROWS_AS(lindelof_delta(pm1, 0, 0.0, 2.0), PreconditionError);
}
