#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "lpsign/rational.hpp"

namespace lpsign {

/// Working precision (in bits) used for newly created BigFloat values.
/// Thread-local so concurrent analyses with different settings don't race.
unsigned working_precision_bits();
void set_working_precision_bits(unsigned bits);

/// Minimal RAII wrapper over an MPFR float. Each value carries the precision
/// it was created with; arithmetic allocates results at the current working
/// precision and rounds to nearest unless an *_up variant is used.
class BigFloat {
  public:
    BigFloat() { mpfr_init2(v_, static_cast<mpfr_prec_t>(working_precision_bits())); mpfr_set_zero(v_, 1); }
    explicit BigFloat(long x) : BigFloat() { mpfr_set_si(v_, x, MPFR_RNDN); }
    explicit BigFloat(double x) : BigFloat() { mpfr_set_d(v_, x, MPFR_RNDN); }
    explicit BigFloat(const Rational& q) : BigFloat() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Deterministic scientific rendering with `digits` significant digits.
    std::string to_string(int digits = 40) const;

    static BigFloat parse(const std::string& text);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  private:
    mpfr_t v_;
};

BigFloat abs(const BigFloat& a);
/// Natural log of |a| as a double; -inf for zero. Safe for magnitudes far
/// outside the double range (the log itself is moderate).
double log_abs_double(const BigFloat& a);
double log_abs_double(const Rational& q);

// Upward-rounded helpers for error-bound bookkeeping. Results are upper
// bounds on the exact quantity (operands assumed nonnegative where it
// matters for bound validity).
BigFloat add_up(const BigFloat& a, const BigFloat& b);
BigFloat sub_down(const BigFloat& a, const BigFloat& b);  // rounded toward -inf
BigFloat mul_up(const BigFloat& a, const BigFloat& b);
BigFloat div_up(const BigFloat& a, const BigFloat& b);
BigFloat div_up(const BigFloat& a, unsigned long b);
BigFloat exp_up(const BigFloat& a);
BigFloat pow_up(const BigFloat& a, const BigFloat& e);

/// One-ulp bound on the rounding error of `v`: |v| * 2^(1-prec), 0 for v = 0.
BigFloat ulp_bound(const BigFloat& v);

}  // namespace lpsign
