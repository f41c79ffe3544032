#pragma once

#include <string>

#include "lpsign/bigfloat.hpp"
#include "lpsign/sign.hpp"

namespace lpsign {

/// Error-tracked float: an interval [value - err, value + err] containing the
/// exact real. `err` is a rigorous absolute bound (nonnegative, finite),
/// maintained with outward rounding; the midpoint uses round-to-nearest.
class Ball {
  public:
    Ball() : value_(0L), err_(0L) {}
    explicit Ball(long x) : value_(x), err_(0L) {}
    explicit Ball(const Rational& q);
    Ball(BigFloat value, BigFloat err);

    /// Exactly representable midpoint, zero radius (caller asserts exactness).
    static Ball exact(BigFloat v) { return Ball(std::move(v), BigFloat(0L)); }

    const BigFloat& value() const { return value_; }
    const BigFloat& error() const { return err_; }

    bool is_exact_zero() const { return value_.is_zero() && err_.is_zero(); }

    /// |value| + err, rounded up: certified upper bound on the magnitude.
    BigFloat abs_upper() const;
    /// max(|value| - err, 0), rounded down: certified lower bound.
    BigFloat abs_lower() const;

    Sign certified_sign() const;

    std::string to_string(int digits = 40) const;

    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    friend Ball operator/(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a);

  private:
    BigFloat value_;
    BigFloat err_;
};

Ball abs(const Ball& a);
Ball div_ui(const Ball& a, unsigned long n);

// Enclosures of elementary functions (error bounds via derivative bounds).
Ball exp(const Ball& a);
Ball cos(const Ball& a);
Ball sin(const Ball& a);
Ball log(const Ball& a);                 // requires value - err > 0
Ball pow(const Ball& a, const BigFloat& e);  // requires value - err > 0

// Correctly rounded constants / special values as one-ulp balls.
Ball zeta_ball(unsigned long k);  // Riemann zeta at integer k >= 2
Ball euler_ball();                // from mpfr, used for cross-checks
Ball pi_ball();

inline double log_abs_double(const Ball& b) { return log_abs_double(b.value()); }

}  // namespace lpsign
