#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lpsign/polynomial.hpp"

namespace lpsign {

/// Location of one distinct real root: either an exact rational point
/// (lo == hi) or an open interval (lo, hi) whose endpoints are not roots and
/// which contains exactly one root of the polynomial in question.
struct RootInterval {
    Rational lo, hi;
    bool is_point() const { return lo == hi; }
};

struct IsolatedRoot {
    RootInterval where;
    unsigned multiplicity = 1;
};

/// Real-rootedness certificate (or refutation) produced over exact rationals.
struct HyperbolicityCertificate {
    bool hyperbolic = false;
    long degree = -1;
    long real_count_with_multiplicity = 0;  // equals degree iff hyperbolic
    std::vector<IsolatedRoot> roots;        // distinct real roots, increasing
    /// All nonzero roots share this sign (+1/-1); 0 when there is no nonzero
    /// root; nullopt when signs are mixed or the polynomial is not hyperbolic.
    std::optional<int> same_sign;

    long deficit() const { return degree - real_count_with_multiplicity; }
};

/// Number of distinct real roots of p in the open interval (lo, hi);
/// nullopt endpoints mean -inf / +inf. Endpoints must not be roots.
long sturm_count(const ExactPolynomial& p, const std::optional<Rational>& lo,
                 const std::optional<Rational>& hi);

/// Isolating intervals for the distinct real roots of a squarefree p,
/// sorted increasing, pairwise disjoint.
std::vector<RootInterval> isolate_real_roots(const ExactPolynomial& p);

/// Square-free decomposition + Sturm counts; accepts iff real roots counted
/// with multiplicity exhaust the degree.
HyperbolicityCertificate is_hyperbolic(const ExactPolynomial& p);

/// Hermite-Biehler test: true iff every zero of u + iv lies in one open
/// half-plane off the real axis. Equivalent (and implemented as): u, v
/// hyperbolic with simple zeros, no common zeros, and the merged zero
/// sequence strictly alternates between the two. Common real zeros return
/// false (boundary case excluded).
bool hermite_biehler_check(const ExactPolynomial& u, const ExactPolynomial& v);

struct ParityZeroReport {
    bool pass = false;
    // u-polynomials E(-u), O(-u) with E(z^2) the even part, z*O(z^2) the odd
    // part; pass means all their roots are real and nonnegative, i.e. all
    // zeros of the even/odd parts are purely imaginary (or at the origin).
    ExactPolynomial even_u, odd_u;
    long even_nonneg_roots = 0, odd_nonneg_roots = 0;
    std::string detail;
};

/// Lemma-2 style check for a hyperbolic polynomial with all nonzero roots of
/// one sign: both parity parts must have purely imaginary zeros only.
ParityZeroReport even_odd_imaginary_check(const ExactPolynomial& p);

/// A real sequence gamma_0, gamma_1, ... acting coefficient-wise.
struct MultiplierSequence {
    enum class Rule { ones, n_plus_one, alternating_factorial, explicit_list };
    Rule rule = Rule::ones;
    std::vector<Rational> list;  // for explicit_list
    std::string provenance;

    Rational at(std::size_t n) const;
    static MultiplierSequence from_name(const std::string& name);
    std::string name() const;
};

/// Coefficient-wise product gamma_n * a_n. The sequence must be defined up to
/// deg(p) (rules always are; explicit lists must be long enough).
ExactPolynomial apply_multiplier(const MultiplierSequence& seq, const ExactPolynomial& p);

struct MultiplierTestReport {
    bool refuted = false;
    std::optional<ExactPolynomial> refuting_instance;  // preimage whose image is not hyperbolic
    std::optional<ExactPolynomial> refuting_image;
    unsigned samples_tested = 0;
    std::vector<Rational> test_series_coefficients;  // gamma_n / n! up to N
    std::string verdict;                             // "refuted" or "consistent up to tested scale"
};

/// Two-sided multiplier-sequence evidence: random same-sign-zero hyperbolic
/// polynomials must map to hyperbolic polynomials (a failure refutes), plus
/// the Polya-Schur test series sum gamma_n z^n / n! for diagnostics.
MultiplierTestReport multiplier_sequence_test(const MultiplierSequence& seq, unsigned sample_count,
                                              unsigned max_deg, std::size_t series_order,
                                              std::uint64_t seed);

/// Random hyperbolic polynomial with integer roots in [-5,5]\{0} (all of one
/// sign when same_sign), repeated roots allowed. Degree in [1, max_deg].
ExactPolynomial random_hyperbolic(std::uint64_t& state, unsigned max_deg, bool same_sign);

/// Deterministic xorshift-style generator used by the seeded batteries.
std::uint64_t rng_next(std::uint64_t& state);
/// Uniform value in [0, n).
std::uint64_t rng_below(std::uint64_t& state, std::uint64_t n);

struct HermiteBiehlerBatteryReport {
    unsigned planted_pass = 0;     // polynomials with planted half-plane zeros accepted
    unsigned reflections_fail = 0; // single-zero reflections rejected
    unsigned planted_total = 0;
    unsigned reflections_total = 0;
    bool clean() const { return planted_pass == planted_total && reflections_fail == reflections_total; }
};

/// Seeded battery: products prod (z - (x_j + i y_j)) with y_j > 0 must pass
/// the check; flipping any single y_j must fail it.
HermiteBiehlerBatteryReport hermite_biehler_battery(unsigned count, unsigned max_deg, std::uint64_t seed);

}  // namespace lpsign
