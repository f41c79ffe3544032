#pragma once

#include <optional>
#include <string>

#include "lpsign/functions.hpp"
#include "lpsign/growth.hpp"
#include "lpsign/hyperbolicity.hpp"
#include "lpsign/signs.hpp"

namespace lpsign {

/// Certified n0 bound for exp(a z^2) P(z) with hyperbolic P, plus exact
/// verification of the alternating-pair condition and the product identity
///   a_{n-1} a_{n+1} = a^(2(k-m)+1) P1(k) P1(k+1) / (k! (k+1)!)  (n = 2k+1).
struct Thm2Report {
    ExactPolynomial p1, p2;  // falling-factorial companion polynomials in x
    long k0 = 0;             // both P1, P2 keep a fixed sign beyond this integer
    std::size_t n0_bound = 0;
    std::size_t empirical_first_clean = 0;  // last observed violation (0 if none)
    std::size_t horizon = 0;
    std::vector<std::size_t> violations;
    bool identity_holds = false;  // exact identity verified at every odd n, k >= m
    bool bound_valid = false;     // empirical_first_clean <= n0_bound
};

Thm2Report thm2_n0_bound(const ExactPolynomial& P, const Rational& a, std::size_t horizon);

/// Theorem-1 hypothesis check: sign tail + Question-A statistic at rho = 2.
struct Thm1Report {
    enum class Verdict { satisfied, violated_in_tail, growth_outside };
    TailReport tail;
    std::optional<GrowthEstimate> growth;
    Verdict verdict = Verdict::satisfied;
    std::string message;
};

std::string to_string(Thm1Report::Verdict v);

template <typename T>
Thm1Report thm1_hypothesis_check(const TruncatedSeries<T>& s, std::size_t horizon,
                                 std::size_t window_lo, std::size_t window_hi);

/// Zero-sequence base for the order-0 factor Pi_1.
enum class Thm3Base {
    e,       // x_n = e^n, certified enclosures
    exact3,  // x_n = 3^n, fully exact surrogate (same exponent of convergence)
};

struct Thm3Construction {
    FunctionSpec spec;  // the product psi (no Gaussian factor yet)
    Rational target_order;
    std::size_t count1 = 0;  // Pi_1 zeros
    std::size_t count2 = 0;  // Pi_2 symmetric pairs (rho > 0 only)
    Thm3Base base = Thm3Base::e;
};

/// Builds the counterexample product: Pi_1 alone for rho = 0, else
/// Pi_2(power-log, lambda per the genus rule) * Pi_1.
Thm3Construction thm3_construct(const Rational& rho, std::size_t count1, std::size_t count2,
                                Thm3Base base = Thm3Base::e);

/// Tail report of exp(a z^2) * psi truncated at the horizon; Theorem 3
/// predicts recurring certified violations.
TailReport thm3_violations(const Thm3Construction& c, const Rational& a, std::size_t horizon);

/// Corollary-1 check for even/odd specs with a < 0: the alternating-pair
/// condition must hold for every n in [1, horizon), no exceptional n0.
struct Corollary1Report {
    TailReport tail;
    GrowthEstimate growth;
    bool zero_violations = false;
    bool statistic_in_window = false;  // windowed max of n |a_n|^(2/n) in (0, inf)
    std::string parity;                // "even" or "odd"
};

Corollary1Report corollary1_verify(const FunctionSpec& spec, std::size_t horizon);

}  // namespace lpsign
