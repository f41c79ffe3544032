#include <doctest.h>

#include "lpsign/hyperbolicity.hpp"
#include "oracles.hpp"

using namespace lpsign;
using lpsign::testing::mix;

namespace {

ExactPolynomial poly(std::vector<std::string> cs) {
    std::vector<Rational> v;
    for (auto& c : cs) v.push_back(parse_rational(c));
    return ExactPolynomial::from_coefficients(std::move(v));
}

ExactPolynomial from_roots(const std::vector<Rational>& roots) {
    ExactPolynomial p = ExactPolynomial::constant(Rational(1));
    for (const auto& r : roots) p = p * ExactPolynomial::from_coefficients({-r, Rational(1)});
    return p;
}

}  // namespace

TEST_CASE("sturm_count on open intervals") {
    auto inf = std::nullopt;
    CHECK(sturm_count(poly({"-1", "0", "1"}), inf, inf) == 2);
    CHECK(sturm_count(poly({"1", "0", "1"}), inf, inf) == 0);
    CHECK(sturm_count(poly({"0", "-3", "0", "1"}), Rational(-2), Rational(2)) == 3);
    CHECK(sturm_count(poly({"0", "-3", "0", "1"}), Rational(0) + Rational(1, 100), inf) == 1);
    // multiple roots count once
    CHECK(sturm_count(poly({"1", "2", "1"}), inf, inf) == 1);
    CHECK_THROWS_AS(sturm_count(ExactPolynomial(), inf, inf), PreconditionError);
    CHECK_THROWS_AS(sturm_count(poly({"-1", "1"}), Rational(1), Rational(2)), PreconditionError);
}

TEST_CASE("root isolation produces disjoint intervals") {
    auto p = from_roots({Rational(1), Rational(2), Rational(-3)});
    auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 3);
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].hi <= ivs[i + 1].lo);
    // each interval brackets exactly one of the roots
    std::vector<Rational> roots{Rational(-3), Rational(1), Rational(2)};
    for (std::size_t i = 0; i < 3; ++i) {
        if (ivs[i].is_point())
            CHECK(ivs[i].lo == roots[i]);
        else {
            CHECK(ivs[i].lo < roots[i]);
            CHECK(roots[i] < ivs[i].hi);
        }
    }
}

TEST_CASE("hyperbolicity certificates") {
    auto c1 = is_hyperbolic(poly({"1", "2", "1"}));  // (1+z)^2
    CHECK(c1.hyperbolic);
    REQUIRE(c1.roots.size() == 1);
    CHECK(c1.roots[0].multiplicity == 2);
    CHECK(c1.same_sign == -1);

    auto c2 = is_hyperbolic(poly({"1", "0", "1"}));  // z^2 + 1
    CHECK_FALSE(c2.hyperbolic);
    CHECK(c2.deficit() == 2);

    auto c3 = is_hyperbolic(poly({"1", "-3/2", "1/2"}));  // (1-z)(1-z/2)
    CHECK(c3.hyperbolic);
    REQUIRE(c3.roots.size() == 2);
    CHECK(c3.same_sign == 1);

    auto c4 = is_hyperbolic(from_roots({Rational(-1), Rational(2)}));
    CHECK(c4.hyperbolic);
    CHECK_FALSE(c4.same_sign.has_value());

    auto c5 = is_hyperbolic(from_roots({Rational(0), Rational(1)}));
    CHECK(c5.hyperbolic);
    CHECK(c5.same_sign == 1);  // nonzero roots all positive

    // root at the origin only
    auto c6 = is_hyperbolic(poly({"0", "0", "1"}));
    CHECK(c6.hyperbolic);
    CHECK(c6.same_sign == 0);
}

TEST_CASE("hyperbolicity agrees with the quadratic discriminant") {
    std::uint64_t s = 11;
    for (int i = 0; i < 200; ++i) {
        Rational a = lpsign::testing::random_rational(s, 5, 4);
        Rational b = lpsign::testing::random_rational(s, 5, 4);
        Rational c = lpsign::testing::random_rational(s, 5, 4);
        if (sgn(a) == 0) continue;
        auto cert = is_hyperbolic(ExactPolynomial::from_coefficients({c, b, a}));
        bool disc_nonneg = sgn(b * b - 4 * a * c) >= 0;
        CHECK(cert.hyperbolic == disc_nonneg);
    }
}

TEST_CASE("planted-root polynomials are accepted, complex plants refuted") {
    std::uint64_t s = 17;
    for (int i = 0; i < 200; ++i) {
        unsigned deg = 1 + mix(s) % 8;
        std::vector<Rational> roots;
        for (unsigned j = 0; j < deg; ++j)
            roots.push_back(Rational(static_cast<long>(mix(s) % 11) - 5));
        auto p = from_roots(roots);
        auto cert = is_hyperbolic(p);
        CHECK(cert.hyperbolic);
        CHECK(cert.real_count_with_multiplicity == p.degree());
        // plant one conjugate pair: must be refuted with deficit 2
        auto q = p * poly({"1", "1", "1"});  // z^2 + z + 1, discriminant < 0
        auto cq = is_hyperbolic(q);
        CHECK_FALSE(cq.hyperbolic);
        CHECK(cq.deficit() == 2);
    }
}

TEST_CASE("hermite_biehler_check catalog") {
    CHECK(hermite_biehler_check(poly({"-2", "0", "1"}), poly({"0", "3"})));
    CHECK_FALSE(hermite_biehler_check(poly({"1", "0", "1"}), poly({"0", "1"})));
    CHECK_FALSE(hermite_biehler_check(poly({"-1", "0", "1"}), poly({"-4", "0", "1"})));
    // (z+i)^2 = z^2 - 1 + i(2z)
    CHECK(hermite_biehler_check(poly({"-1", "0", "1"}), poly({"0", "2"})));
    // common real zero is the excluded boundary case
    CHECK_FALSE(hermite_biehler_check(poly({"-1", "1"}), poly({"-2", "3", "-1"})));
    // constants: no zeros at all
    CHECK(hermite_biehler_check(poly({"5"}), poly({"1"})));
    CHECK(hermite_biehler_check(poly({"-3", "1"}), poly({"2"})));
    CHECK_THROWS_AS(hermite_biehler_check(ExactPolynomial(), ExactPolynomial()), PreconditionError);
}

TEST_CASE("hermite_biehler battery: planted half-plane zeros and reflections") {
    auto rep = hermite_biehler_battery(25, 5, 42);
    CHECK(rep.planted_total == 25);
    CHECK(rep.planted_pass == 25);
    CHECK(rep.reflections_fail == rep.reflections_total);
}

TEST_CASE("even/odd parts of same-sign hyperbolic polynomials") {
    auto r1 = even_odd_imaginary_check(poly({"1", "-2", "1"}));  // (1-z)^2
    CHECK(r1.pass);
    auto r2 = even_odd_imaginary_check(poly({"1", "-3/2", "1/2"}));
    CHECK(r2.pass);
    CHECK_THROWS_AS(even_odd_imaginary_check(from_roots({Rational(1), Rational(-1, 2)})),
                    PreconditionError);
    CHECK_THROWS_AS(even_odd_imaginary_check(poly({"1", "0", "1"})), PreconditionError);

    std::uint64_t s = 23;
    for (int i = 0; i < 100; ++i) {
        auto p = random_hyperbolic(s, 10, true);
        CHECK(even_odd_imaginary_check(p).pass);
    }
}

TEST_CASE("multiplier application") {
    MultiplierSequence ones = MultiplierSequence::from_name("ones");
    auto p = poly({"1", "2", "1"});
    CHECK(apply_multiplier(ones, p) == p);

    MultiplierSequence n_list;
    n_list.rule = MultiplierSequence::Rule::explicit_list;
    n_list.list = {Rational(0), Rational(1), Rational(2)};
    CHECK(apply_multiplier(n_list, p) == poly({"0", "2", "2"}));
    CHECK(is_hyperbolic(apply_multiplier(n_list, p)).hyperbolic);
    CHECK_THROWS_AS(apply_multiplier(n_list, poly({"1", "0", "0", "1"})), PreconditionError);

    MultiplierSequence alt;
    alt.rule = MultiplierSequence::Rule::explicit_list;
    alt.list = {Rational(1), Rational(-1)};
    CHECK(apply_multiplier(alt, poly({"1", "1"})) == poly({"1", "-1"}));

    // linearity in p
    std::uint64_t s = 29;
    MultiplierSequence npl = MultiplierSequence::from_name("n_plus_1");
    for (int i = 0; i < 20; ++i) {
        auto a = random_hyperbolic(s, 4, false);
        auto b = random_hyperbolic(s, 4, false);
        Rational c = lpsign::testing::random_rational(s, 6, 3);
        CHECK(apply_multiplier(npl, a + c * b) ==
              apply_multiplier(npl, a) + c * apply_multiplier(npl, b));
    }
}

TEST_CASE("multiplier sequence test: refutation and consistency") {
    // (-1)^n n! sends (1+z)^2 to 1 - 2z + 2z^2, which has no real zeros.
    auto img = apply_multiplier(MultiplierSequence::from_name("alt_factorial"), poly({"1", "2", "1"}));
    CHECK(img == poly({"1", "-2", "2"}));
    CHECK_FALSE(is_hyperbolic(img).hyperbolic);

    auto r1 = multiplier_sequence_test(MultiplierSequence::from_name("alt_factorial"), 100, 6, 16, 1);
    CHECK(r1.refuted);
    REQUIRE(r1.refuting_instance.has_value());
    CHECK_FALSE(is_hyperbolic(*r1.refuting_image).hyperbolic);

    auto r2 = multiplier_sequence_test(MultiplierSequence::from_name("ones"), 50, 6, 16, 2);
    CHECK_FALSE(r2.refuted);
    CHECK(r2.verdict == "consistent up to tested scale");
    // test series of ones is exp(z)
    CHECK(r2.test_series_coefficients[3] == Rational(1, 6));

    auto r3 = multiplier_sequence_test(MultiplierSequence::from_name("n_plus_1"), 50, 6, 16, 3);
    CHECK_FALSE(r3.refuted);
    // test series is (1+z) e^z: a_2 = 1/2! + 1/1! ... gamma_2/2! = 3/2? gamma_2 = 3, /2! = 3/2
    CHECK(r3.test_series_coefficients[2] == Rational(3, 2));
}
