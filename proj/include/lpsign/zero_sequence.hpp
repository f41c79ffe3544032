#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpsign/ball.hpp"
#include "lpsign/rational.hpp"

namespace lpsign {

enum class ZeroKind {
    explicit_list,  // finitely many given nonzero rationals
    exp_growth,     // x_n = c * r^n (r rational > 1, or r = e)
    power_log,      // symmetric pairs +/- (n log(n+1))^(1/rho)
    arithmetic,     // x_n = c * n
};

std::string to_string(ZeroKind k);
ZeroKind zero_kind_from_string(const std::string& s);

/// A finite or rule-generated list of real zeros together with the genus
/// parameter lambda of the elementary factors and the exponent of
/// convergence of the full (untruncated) sequence.
struct ZeroSequence {
    ZeroKind kind = ZeroKind::explicit_list;
    std::vector<Rational> zeros;          // explicit_list payload
    Rational scale{1};                    // c for exp_growth / arithmetic
    std::optional<Rational> base;         // exp_growth base; nullopt = e
    Rational power_log_rho{1};            // power_log exponent parameter, in (0, 2]
    std::size_t count = 0;                // zeros to materialize (pairs count twice)
    int genus_param = 0;                  // lambda in {0, 1}
    double declared_exponent = 0.0;

    static ZeroSequence explicit_zeros(std::vector<Rational> zs, int lambda = 0);
    static ZeroSequence exponential(Rational c, std::optional<Rational> base, std::size_t count,
                                    int lambda = 0);
    static ZeroSequence power_log(Rational rho, std::size_t pairs, int lambda);
    static ZeroSequence arithmetic(Rational c, std::size_t count);

    /// Closed-form exponent of convergence for the declared kind.
    double natural_exponent() const;

    /// Enforces the type invariants (nonzero zeros, lambda/kind convergence
    /// compatibility, parameter ranges). Throws PreconditionError.
    void validate() const;

    /// True when every materialized zero is an exact rational.
    bool is_exact() const;

    std::vector<Rational> materialize_exact() const;
    std::vector<Ball> materialize_ball() const;

    /// Materialized count (explicit lists use the list length).
    std::size_t materialized_count() const;
};

}  // namespace lpsign
