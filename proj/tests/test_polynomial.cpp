#include <doctest.h>

#include "lpsign/polynomial.hpp"
#include "lpsign/errors.hpp"

using namespace lpsign;

namespace {

ExactPolynomial poly(std::vector<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.push_back(Rational(c));
    return ExactPolynomial::from_coefficients(std::move(v));
}

}  // namespace

TEST_CASE("normalization and evaluation") {
    CHECK(ExactPolynomial().is_zero());
    CHECK(ExactPolynomial().degree() == -1);
    CHECK(poly({1, 2, 0, 0}).degree() == 1);
    CHECK(poly({2, 0, 1}).eval(Rational(3)) == 11);
    CHECK(poly({0, 1}).derivative() == poly({1}));
    CHECK(poly({1, 1, 1}).derivative() == poly({1, 2}));
}

TEST_CASE("division with remainder") {
    auto a = poly({-1, 0, 0, 1});  // x^3 - 1
    auto b = poly({-1, 1});        // x - 1
    auto [q, r] = divmod(a, b);
    CHECK(q == poly({1, 1, 1}));
    CHECK(r.is_zero());

    auto [q2, r2] = divmod(poly({1, 0, 1}), poly({1, 1}));
    CHECK(q2 * poly({1, 1}) + r2 == poly({1, 0, 1}));
    CHECK(r2.degree() < 1);

    CHECK_THROWS_AS(divmod(a, ExactPolynomial()), PreconditionError);
}

TEST_CASE("monic gcd") {
    auto p = poly({-1, 1}) * poly({-2, 1});
    auto q = poly({-1, 1}) * poly({-3, 1});
    CHECK(gcd(p, q) == poly({-1, 1}));
    CHECK(gcd(p, poly({7})).degree() == 0);
    CHECK(gcd(ExactPolynomial(), p) == p);  // p is monic already
    CHECK(gcd(ExactPolynomial(), Rational(2) * p) == p);  // monic normalization
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
    // (x-1)^2 (x+1)
    auto p = poly({-1, 1}) * poly({-1, 1}) * poly({1, 1});
    auto dec = squarefree_decomposition(p);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].second == 1);
    CHECK(dec[0].first == poly({1, 1}));
    CHECK(dec[1].second == 2);
    CHECK(dec[1].first == poly({-1, 1}));

    // x^5: single factor of multiplicity 5
    auto dec2 = squarefree_decomposition(poly({0, 0, 0, 0, 0, 1}));
    REQUIRE(dec2.size() == 1);
    CHECK(dec2[0].second == 5);
    CHECK(dec2[0].first == poly({0, 1}));

    CHECK(squarefree_part(p) == poly({-1, 1}) * poly({1, 1}));
}

TEST_CASE("Cauchy bound strictly contains all roots") {
    auto p = poly({-6, 11, -6, 1});  // roots 1, 2, 3
    Rational b = cauchy_root_bound(p);
    CHECK(b == 12);  // 1 + 11/1
    CHECK(p.eval(b) != 0);
    CHECK(p.eval(-b) != 0);
}
