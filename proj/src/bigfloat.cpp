#include "lpsign/bigfloat.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "lpsign/errors.hpp"

namespace lpsign {

namespace {
thread_local unsigned g_precision_bits = 256;
}

unsigned working_precision_bits() { return g_precision_bits; }

void set_working_precision_bits(unsigned bits) {
    if (bits < 16 || bits > (1u << 24))
        throw PreconditionError("working precision must be in [16, 2^24] bits");
    g_precision_bits = bits;
}

std::string BigFloat::to_string(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRe", digits);
    int need = mpfr_snprintf(nullptr, 0, fmt, v_);
    std::vector<char> buf(static_cast<size_t>(need) + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

BigFloat BigFloat::parse(const std::string& text) {
    BigFloat out;
    if (mpfr_set_str(out.v_, text.c_str(), 10, MPFR_RNDN) != 0 && !out.is_finite())
        throw ParseError("malformed float literal: '" + text + "'");
    return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
BigFloat operator-(const BigFloat& a) {
    BigFloat r;
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& a) {
    BigFloat r;
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

double log_abs_double(const BigFloat& a) {
    if (a.is_zero()) return -INFINITY;
    BigFloat t;
    mpfr_abs(t.raw(), a.raw(), MPFR_RNDN);
    mpfr_log(t.raw(), t.raw(), MPFR_RNDN);
    return t.to_double();
}

double log_abs_double(const Rational& q) {
    if (sgn(q) == 0) return -INFINITY;
    return log_abs_double(BigFloat(q));
}

BigFloat add_up(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return r;
}
BigFloat sub_down(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDD);
    return r;
}
BigFloat mul_up(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return r;
}
BigFloat div_up(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return r;
}
BigFloat div_up(const BigFloat& a, unsigned long b) {
    BigFloat r;
    mpfr_div_ui(r.raw(), a.raw(), b, MPFR_RNDU);
    return r;
}
BigFloat exp_up(const BigFloat& a) {
    BigFloat r;
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDU);
    return r;
}
BigFloat pow_up(const BigFloat& a, const BigFloat& e) {
    BigFloat r;
    mpfr_pow(r.raw(), a.raw(), e.raw(), MPFR_RNDU);
    return r;
}

BigFloat ulp_bound(const BigFloat& v) {
    BigFloat r;
    if (v.is_zero()) {
        mpfr_set_zero(r.raw(), 1);
        return r;
    }
    mpfr_abs(r.raw(), v.raw(), MPFR_RNDU);
    mpfr_mul_2si(r.raw(), r.raw(), 1 - static_cast<long>(mpfr_get_prec(v.raw())), MPFR_RNDU);
    return r;
}

}  // namespace lpsign
