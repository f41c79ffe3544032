#include <doctest.h>

#include "lpsign/functions.hpp"
#include "lpsign/signs.hpp"
#include "oracles.hpp"

using namespace lpsign;
using lpsign::testing::hermite_half_signs;
using lpsign::testing::mix;

namespace {

FunctionSpec gauss_exp_spec() {
    FunctionSpec spec;
    spec.gauss_a = Rational(-1);
    spec.classical_factors.push_back(ClassicalFactor::named("exp"));
    return spec;
}

std::vector<int> to_ints(const SignSequence& s) {
    std::vector<int> out;
    for (Sign v : s.entries) out.push_back(sign_value(v));
    return out;
}

}  // namespace

TEST_CASE("sign sequences of the catalog functions") {
    auto s1 = sign_sequence(build_function<Rational>(gauss_exp_spec(), 6));
    CHECK(to_ints(s1) == std::vector<int>{1, 1, -1, -1, 1, 1, 1});
    CHECK(s1.policy == "exact");

    FunctionSpec cs;
    cs.gauss_a = Rational(-1);
    cs.classical_factors.push_back(ClassicalFactor::named("cos_sqrt"));
    auto s2 = sign_sequence(build_function<Rational>(cs, 4));
    CHECK(to_ints(s2) == std::vector<int>{1, -1, -1, 1, 1});

    auto s3 = sign_sequence(RationalSeries(5));
    for (int v : to_ints(s3)) CHECK(v == 0);
}

TEST_CASE("exp(z - z^2) signs match the integer Hermite oracle exactly") {
    // a_n = H_n(1/2) / n! with H_{n+1} = H_n - 2n H_{n-1}: an independent
    // integer-recurrence route to every sign.
    auto s = sign_sequence(build_function<Rational>(gauss_exp_spec(), 120));
    auto oracle = hermite_half_signs(120);
    for (std::size_t n = 0; n <= 120; ++n) CHECK(sign_value(s.at(n)) == oracle[n]);
}

TEST_CASE("ball certification policy") {
    BallSeries s(3);
    s.set(0, Ball(Rational(1, 3)));                 // certified +
    s.set(1, Ball(BigFloat(0L), BigFloat(1e-30)));  // zero value, positive radius
    s.set(2, Ball(BigFloat(1e-40), BigFloat(1e-30)));
    auto sg = sign_sequence(s);
    CHECK(sg.at(0) == Sign::plus);
    CHECK(sg.at(1) == Sign::indeterminate);
    CHECK(sg.at(2) == Sign::indeterminate);
    CHECK(sg.at(3) == Sign::zero);  // untouched default is exactly zero
    CHECK(render(sg) == "+??0");
}

TEST_CASE("tail_check catalog") {
    // even function: structural zeros never count as violations
    auto even = tail_check(sign_sequence(gaussian_series<Rational>(Rational(-1), Rational(0), 50)));
    CHECK(even.violations.empty());
    CHECK(even.n0_empirical == 0);

    // all-positive signs: every interior pair violates
    auto allpos = tail_check(sign_sequence(classical_series<Rational>(ClassicalFactor::named("exp"), 20)));
    CHECK(allpos.violations.size() == 19);
    CHECK(allpos.n0_empirical == 19);
    CHECK_FALSE(allpos.clean_tail_observed);

    // exp(z - z^2) up to N = 25: the genuine violation set is {5, 20}; the
    // printed table in the source material smooths the second one away, and
    // the Hermite oracle test above proves the 20 is real.
    auto t = tail_check(sign_sequence(build_function<Rational>(gauss_exp_spec(), 25)));
    CHECK(t.violations == std::vector<std::size_t>{5, 20});
    CHECK(t.n0_empirical == 20);

    CHECK_THROWS_AS(tail_check(sign_sequence(RationalSeries(1))), PreconditionError);
}

TEST_CASE("indeterminate neighbors are reported, never counted") {
    SignSequence sg;
    sg.policy = "ball(256)";
    sg.entries = {Sign::plus, Sign::plus, Sign::indeterminate, Sign::minus, Sign::plus, Sign::plus};
    auto t = tail_check(sg);
    CHECK(t.indeterminate_indices == std::vector<std::size_t>{1, 3});
    CHECK(t.violations.empty());  // (+,-) and (-,+) pairs are fine
    sg.entries[3] = Sign::plus;
    auto t2 = tail_check(sg);
    CHECK(t2.violations == std::vector<std::size_t>{2, 4});
    CHECK(t2.indeterminate_indices == std::vector<std::size_t>{1, 3});
}

TEST_CASE("tail_check horizon extension is monotone") {
    std::uint64_t seed = 404;
    for (int trial = 0; trial < 30; ++trial) {
        SignSequence sg;
        sg.policy = "exact";
        for (int i = 0; i < 40; ++i) {
            unsigned r = static_cast<unsigned>(mix(seed) % 4);
            sg.entries.push_back(r == 0 ? Sign::zero : (r == 1 ? Sign::minus : Sign::plus));
        }
        SignSequence prefix;
        prefix.policy = "exact";
        prefix.entries.assign(sg.entries.begin(), sg.entries.begin() + 20);
        auto tp = tail_check(prefix);
        auto tf = tail_check(sg);
        for (std::size_t v : tp.violations)
            CHECK(std::find(tf.violations.begin(), tf.violations.end(), v) != tf.violations.end());
    }
}

TEST_CASE("pattern scan") {
    auto s = sign_sequence(build_function<Rational>(gauss_exp_spec(), 26));
    auto hits = pattern_scan(s, {1, 1, -1, -1});
    CHECK(hits == std::vector<std::size_t>{0, 5, 9, 13, 17, 22});

    SignSequence ones;
    ones.policy = "exact";
    ones.entries.assign(5, Sign::plus);
    CHECK(pattern_scan(ones, {1}) == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(pattern_scan(ones, std::vector<int>(9, 1)).empty());
    CHECK_THROWS_AS(pattern_scan(ones, {}), PreconditionError);
    CHECK_THROWS_AS(pattern_scan(ones, {2}), PreconditionError);

    // zeros and indeterminates never match
    SignSequence mixed;
    mixed.policy = "exact";
    mixed.entries = {Sign::plus, Sign::zero, Sign::plus, Sign::indeterminate, Sign::plus};
    CHECK(pattern_scan(mixed, {1, 1}).empty());
}

TEST_CASE("modulus identity for strictly alternating truncations") {
    // For sign patterns with strictly alternating even and odd subsequences,
    // |g(it)|^2 = E(t)^2 + O(t)^2 holds exactly on the rational backend,
    // where E, O are the absolute even/odd sums.
    std::uint64_t seed = 505;
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t N = 8 + mix(seed) % 12;
        RationalSeries g(N);
        int se = mix(seed) % 2 ? 1 : -1;
        int so = mix(seed) % 2 ? 1 : -1;
        for (std::size_t n = 0; n <= N; ++n) {
            Rational mag(1 + static_cast<long>(mix(seed) % 40), 1 + mix(seed) % 7);
            long par = static_cast<long>(n / 2);
            int sign = (n % 2 == 0 ? se : so) * (par % 2 == 0 ? 1 : -1);
            g.set(n, Rational(sign) * mag);
        }
        for (Rational t : {Rational(1, 2), Rational(1), Rational(2)}) {
            auto [re, im] = eval_imaginary(g, t);
            Rational abs_even(0), abs_odd(0), tp(1);
            for (std::size_t n = 0; n <= N; ++n) {
                (n % 2 == 0 ? abs_even : abs_odd) += abs(g[n]) * tp;
                tp *= t;
            }
            CHECK(re * re + im * im == abs_even * abs_even + abs_odd * abs_odd);
        }
    }
}

TEST_CASE("even-function modulus identity") {
    // Even truncations with strictly alternating even signs satisfy
    // |h(it)| = sum |c_2n| t^2n exactly.
    std::uint64_t seed = 606;
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t N = 10 + 2 * (mix(seed) % 6);
        RationalSeries h(N);
        int se = mix(seed) % 2 ? 1 : -1;
        for (std::size_t n = 0; n <= N; n += 2) {
            Rational mag(1 + static_cast<long>(mix(seed) % 9), 1 + mix(seed) % 5);
            h.set(n, Rational(((n / 2) % 2 == 0 ? se : -se)) * mag);
        }
        for (Rational t : {Rational(1, 2), Rational(3)}) {
            auto [re, im] = eval_imaginary(h, t);
            CHECK(im == 0);
            Rational sum(0), tp(1);
            for (std::size_t n = 0; n <= N; ++n) {
                if (n % 2 == 0) sum += abs(h[n]) * tp;
                tp *= t;
            }
            CHECK(abs(re) == sum);
        }
    }
}
