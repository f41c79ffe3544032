#pragma once

#include <string>
#include <vector>

#include "lpsign/series.hpp"
#include "lpsign/zero_sequence.hpp"

namespace lpsign {

/// Named classical entire functions from the catalog.
struct ClassicalFactor {
    enum class Kind { exp, cos_sqrt, recip_gamma, cos_affine, laguerre_family };
    Kind kind = Kind::exp;
    // cos_affine / laguerre_family parameters (vartheta, theta); exact
    // rationals, irrational angles enter via decimal approximants.
    Rational vartheta{0};
    Rational theta{0};

    static ClassicalFactor named(const std::string& name);
    std::string name() const;
};

/// Declarative description of c * z^k * exp(a z^2 + b z) * products * classics.
struct FunctionSpec {
    Rational scale{1};
    unsigned monomial_power = 0;
    Rational gauss_a{0};
    Rational lin_b{0};
    std::vector<ZeroSequence> product_factors;
    std::vector<ClassicalFactor> classical_factors;

    void validate() const;
    /// Exact iff every factor materializes to rationals and no classical
    /// factor needs irrational data (exp and cos_sqrt are exact).
    bool is_exact() const;
};

/// Expansion of exp(a z^2 + b z) to order N.
template <typename T>
TruncatedSeries<T> gaussian_series(const Rational& a, const Rational& b, std::size_t order);

/// Truncated product of (1 - z/x_n) exp(lambda z / x_n) over the materialized
/// zeros, arranged by increasing |x_n|.
template <typename T>
TruncatedSeries<T> canonical_product_series(const ZeroSequence& zeros, std::size_t order);

template <typename T>
TruncatedSeries<T> classical_series(const ClassicalFactor& factor, std::size_t order);

template <typename T>
TruncatedSeries<T> build_function(const FunctionSpec& spec, std::size_t order);

enum class Subclass { LPa, LPI, LP0 };
std::string to_string(Subclass s);

/// Judges the declared spec (never a truncation): LPa when a < 0; else LPI
/// when the representation matches the type-I normal form; else LP0.
Subclass classify_subclass(const FunctionSpec& spec);

}  // namespace lpsign
