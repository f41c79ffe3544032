#include "lpsign/ball.hpp"

#include "lpsign/errors.hpp"

namespace lpsign {

namespace {

BigFloat rounding_err(int ternary, const BigFloat& v) {
    if (ternary == 0) return BigFloat(0L);
    return ulp_bound(v);
}

}  // namespace

Ball::Ball(const Rational& q) : value_(0L), err_(0L) {
    int t = mpfr_set_q(value_.raw(), q.get_mpq_t(), MPFR_RNDN);
    err_ = rounding_err(t, value_);
}

Ball::Ball(BigFloat value, BigFloat err) : value_(std::move(value)), err_(std::move(err)) {
    if (err_.sgn() < 0 || !err_.is_finite())
        throw PreconditionError("ball error bound must be nonnegative and finite");
}

BigFloat Ball::abs_upper() const {
    BigFloat r;
    mpfr_abs(r.raw(), value_.raw(), MPFR_RNDU);
    mpfr_add(r.raw(), r.raw(), err_.raw(), MPFR_RNDU);
    return r;
}

BigFloat Ball::abs_lower() const {
    BigFloat r;
    mpfr_abs(r.raw(), value_.raw(), MPFR_RNDD);
    mpfr_sub(r.raw(), r.raw(), err_.raw(), MPFR_RNDD);
    if (r.sgn() < 0) mpfr_set_zero(r.raw(), 1);
    return r;
}

Sign Ball::certified_sign() const {
    if (is_exact_zero()) return Sign::zero;
    if (mpfr_cmpabs(value_.raw(), err_.raw()) > 0) return value_.sgn() > 0 ? Sign::plus : Sign::minus;
    return Sign::indeterminate;
}

std::string Ball::to_string(int digits) const {
    return value_.to_string(digits) + " +/- " + err_.to_string(3);
}

Ball operator+(const Ball& a, const Ball& b) {
    BigFloat v;
    int t = mpfr_add(v.raw(), a.value().raw(), b.value_.raw(), MPFR_RNDN);
    BigFloat e = add_up(add_up(a.err_, b.err_), rounding_err(t, v));
    return Ball(std::move(v), std::move(e));
}

Ball operator-(const Ball& a, const Ball& b) {
    BigFloat v;
    int t = mpfr_sub(v.raw(), a.value().raw(), b.value_.raw(), MPFR_RNDN);
    BigFloat e = add_up(add_up(a.err_, b.err_), rounding_err(t, v));
    return Ball(std::move(v), std::move(e));
}

Ball operator*(const Ball& a, const Ball& b) {
    BigFloat v;
    int t = mpfr_mul(v.raw(), a.value().raw(), b.value_.raw(), MPFR_RNDN);
    // |a||eb| + |b||ea| + ea*eb, all upward
    BigFloat e = add_up(mul_up(abs(a.value_), b.err_), mul_up(abs(b.value_), a.err_));
    e = add_up(e, mul_up(a.err_, b.err_));
    e = add_up(e, rounding_err(t, v));
    return Ball(std::move(v), std::move(e));
}

Ball operator/(const Ball& a, const Ball& b) {
    BigFloat blo = b.abs_lower();
    if (blo.sgn() <= 0) throw PreconditionError("ball division: divisor not certified nonzero");
    BigFloat v;
    int t = mpfr_div(v.raw(), a.value().raw(), b.value_.raw(), MPFR_RNDN);
    // |x/y - a/b| <= (ea|b| + |a|eb) / (|b| * (|b| - eb))
    BigFloat num = add_up(mul_up(a.err_, abs(b.value_)), mul_up(abs(a.value_), b.err_));
    BigFloat den;
    mpfr_abs(den.raw(), b.value_.raw(), MPFR_RNDD);
    mpfr_mul(den.raw(), den.raw(), blo.raw(), MPFR_RNDD);
    BigFloat e = add_up(div_up(num, den), rounding_err(t, v));
    return Ball(std::move(v), std::move(e));
}

Ball operator-(const Ball& a) {
    BigFloat v;
    mpfr_neg(v.raw(), a.value().raw(), MPFR_RNDN);  // exact at same precision
    return Ball(std::move(v), a.error());
}

Ball abs(const Ball& a) {
    BigFloat v;
    mpfr_abs(v.raw(), a.value().raw(), MPFR_RNDN);
    return Ball(std::move(v), a.error());
}

Ball div_ui(const Ball& a, unsigned long n) {
    if (n == 0) throw PreconditionError("division by zero");
    BigFloat v;
    int t = mpfr_div_ui(v.raw(), a.value().raw(), n, MPFR_RNDN);
    BigFloat e = add_up(div_up(a.error(), n), rounding_err(t, v));
    return Ball(std::move(v), std::move(e));
}

Ball exp(const Ball& a) {
    BigFloat v;
    int t = mpfr_exp(v.raw(), a.value().raw(), MPFR_RNDN);
    // |exp(x) - exp(a)| <= exp(a + ea) * ea  for x in [a - ea, a + ea]
    BigFloat e = mul_up(exp_up(add_up(a.value(), a.error())), a.error());
    e = add_up(e, rounding_err(t, v));
    return Ball(std::move(v), std::move(e));
}

Ball cos(const Ball& a) {
    BigFloat v;
    int t = mpfr_cos(v.raw(), a.value().raw(), MPFR_RNDN);
    BigFloat e = add_up(a.error(), rounding_err(t, v));  // |cos'| <= 1
    return Ball(std::move(v), std::move(e));
}

Ball sin(const Ball& a) {
    BigFloat v;
    int t = mpfr_sin(v.raw(), a.value().raw(), MPFR_RNDN);
    BigFloat e = add_up(a.error(), rounding_err(t, v));
    return Ball(std::move(v), std::move(e));
}

Ball log(const Ball& a) {
    BigFloat lo = a.abs_lower();
    if (lo.sgn() <= 0 || a.value().sgn() <= 0)
        throw PreconditionError("ball log: argument not certified positive");
    BigFloat v;
    int t = mpfr_log(v.raw(), a.value().raw(), MPFR_RNDN);
    BigFloat e = add_up(div_up(a.error(), lo), rounding_err(t, v));  // |log'| <= 1/lo
    return Ball(std::move(v), std::move(e));
}

Ball pow(const Ball& a, const BigFloat& expo) {
    BigFloat lo = a.abs_lower();
    if (lo.sgn() <= 0 || a.value().sgn() <= 0)
        throw PreconditionError("ball pow: base not certified positive");
    BigFloat v;
    int t = mpfr_pow(v.raw(), a.value().raw(), expo.raw(), MPFR_RNDN);
    // |d/dx x^s| = |s| x^(s-1), maximized at an endpoint of [lo, hi]
    BigFloat hi = add_up(abs(a.value()), a.error());
    BigFloat em1 = expo - BigFloat(1L);
    BigFloat d1 = pow_up(hi, em1), d2 = pow_up(lo, em1);
    BigFloat dmax = d1 > d2 ? d1 : d2;
    BigFloat e = add_up(mul_up(mul_up(abs(expo), dmax), a.error()), rounding_err(t, v));
    return Ball(std::move(v), std::move(e));
}

Ball zeta_ball(unsigned long k) {
    if (k < 2) throw PreconditionError("zeta_ball requires k >= 2");
    BigFloat v;
    int t = mpfr_zeta_ui(v.raw(), k, MPFR_RNDN);
    return Ball(v, rounding_err(t, v));
}

Ball euler_ball() {
    BigFloat v;
    int t = mpfr_const_euler(v.raw(), MPFR_RNDN);
    return Ball(v, rounding_err(t, v));
}

Ball pi_ball() {
    BigFloat v;
    int t = mpfr_const_pi(v.raw(), MPFR_RNDN);
    return Ball(v, rounding_err(t, v));
}

}  // namespace lpsign
