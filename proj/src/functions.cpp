#include "lpsign/functions.hpp"

#include <type_traits>

#include "lpsign/constants.hpp"
#include "lpsign/errors.hpp"

namespace lpsign {

Ball euler_gamma_constant() {
    BigFloat v = BigFloat::parse(kEulerGammaDigits);
    return Ball(v, add_up(ulp_bound(v), BigFloat::parse("1e-108")));
}

Ball pi_constant() {
    BigFloat v = BigFloat::parse(kPiDigits);
    return Ball(v, add_up(ulp_bound(v), BigFloat::parse("1e-108")));
}

ClassicalFactor ClassicalFactor::named(const std::string& name) {
    ClassicalFactor f;
    if (name == "exp")
        f.kind = Kind::exp;
    else if (name == "cos_sqrt")
        f.kind = Kind::cos_sqrt;
    else if (name == "recip_gamma")
        f.kind = Kind::recip_gamma;
    else if (name == "cos_affine")
        f.kind = Kind::cos_affine;
    else if (name == "laguerre_family")
        f.kind = Kind::laguerre_family;
    else
        throw ParseError("unknown classical factor: '" + name + "'");
    return f;
}

std::string ClassicalFactor::name() const {
    switch (kind) {
        case Kind::exp: return "exp";
        case Kind::cos_sqrt: return "cos_sqrt";
        case Kind::recip_gamma: return "recip_gamma";
        case Kind::cos_affine: return "cos_affine";
        case Kind::laguerre_family: return "laguerre_family";
    }
    return "?";
}

void FunctionSpec::validate() const {
    for (const auto& pf : product_factors) pf.validate();
}

bool FunctionSpec::is_exact() const {
    for (const auto& pf : product_factors)
        if (!pf.is_exact()) return false;
    for (const auto& cf : classical_factors)
        if (cf.kind != ClassicalFactor::Kind::exp && cf.kind != ClassicalFactor::Kind::cos_sqrt)
            return false;
    return true;
}

template <typename T>
TruncatedSeries<T> gaussian_series(const Rational& a, const Rational& b, std::size_t order) {
    TruncatedSeries<T> arg(order);
    if (order >= 1) arg.set(1, coeff_from_rational<T>(b));
    if (order >= 2) arg.set(2, coeff_from_rational<T>(a));
    return exp(arg);
}

namespace {

template <typename T>
std::vector<T> materialize(const ZeroSequence& zeros) {
    if constexpr (std::is_same_v<T, Rational>) {
        return zeros.materialize_exact();
    } else {
        return zeros.materialize_ball();
    }
}

/// n-th coefficient step for series with terms c_n = c_{n-1} * f / n.
template <typename T>
T next_term(const T& prev, const T& factor, unsigned long n) {
    return div_by_uint(prev * factor, n);
}

}  // namespace

template <typename T>
TruncatedSeries<T> canonical_product_series(const ZeroSequence& zeros, std::size_t order) {
    auto xs = materialize<T>(zeros);
    TruncatedSeries<T> out(order);
    out.set(0, coeff_from_long<T>(1));
    T inv_sum = coeff_from_long<T>(0);
    for (const auto& x : xs) {
        T inv = coeff_from_long<T>(1) / x;
        T neg_inv = -inv;
        out = mul_linear(out, neg_inv);
        if (zeros.genus_param == 1) inv_sum = inv_sum + inv;
    }
    if (zeros.genus_param == 1) {
        // prod exp(z/x_n) collapses to one exponential of (sum 1/x_n) z.
        TruncatedSeries<T> lin(order);
        if (order >= 1) lin.set(1, inv_sum);
        out = mul(out, exp(lin));
    }
    return out;
}

template <typename T>
TruncatedSeries<T> classical_series(const ClassicalFactor& factor, std::size_t order) {
    TruncatedSeries<T> out(order);
    switch (factor.kind) {
        case ClassicalFactor::Kind::exp: {
            T c = coeff_from_long<T>(1);
            out.set(0, c);
            for (std::size_t n = 1; n <= order; ++n) {
                c = div_by_uint(c, n);
                out.set(n, c);
            }
            return out;
        }
        case ClassicalFactor::Kind::cos_sqrt: {
            // a_n = (-1)^n / (2n)!
            T c = coeff_from_long<T>(1);
            out.set(0, c);
            for (std::size_t n = 1; n <= order; ++n) {
                c = div_by_uint(div_by_uint(c, 2 * n - 1), 2 * n);
                T v = c;
                if (n % 2 == 1) v = -v;
                out.set(n, std::move(v));
            }
            return out;
        }
        case ClassicalFactor::Kind::recip_gamma: {
            if constexpr (std::is_same_v<T, Rational>) {
                throw PreconditionError("recip_gamma requires the error-tracked backend");
            } else {
                // 1/Gamma(z) = z * exp(gamma z + sum_{k>=2} (-1)^(k+1) zeta(k) z^k / k).
                // The k > N terms cannot touch coefficients <= N, so the
                // truncated exponential argument gives the exact Maclaurin
                // coefficients up to ball rounding.
                TruncatedSeries<Ball> logser(order);
                if (order >= 1) logser.set(1, euler_gamma_constant());
                for (std::size_t k = 2; k <= order; ++k) {
                    Ball term = div_ui(zeta_ball(static_cast<unsigned long>(k)), k);
                    if (k % 2 == 0) term = -term;
                    logser.set(k, std::move(term));
                }
                return shift_up(exp(logser), 1);
            }
        }
        case ClassicalFactor::Kind::cos_affine: {
            if constexpr (std::is_same_v<T, Rational>) {
                throw PreconditionError("cos_affine requires the error-tracked backend");
            } else {
                // cos(vartheta + z sin(theta)) =
                //   cos(vartheta) cos(z s) - sin(vartheta) sin(z s), s = sin(theta)
                Ball vt{factor.vartheta}, th{factor.theta};
                Ball cvt = cos(vt), svt = sin(vt), s = sin(th);
                Ball term = coeff_from_long<Ball>(1);  // s^n / n!
                out.set(0, cvt);
                for (std::size_t n = 1; n <= order; ++n) {
                    term = next_term(term, s, n);
                    long sgn = (n / 2) % 2 == 0 ? 1 : -1;
                    Ball c = n % 2 == 0 ? cvt * term : -(svt * term);
                    out.set(n, coeff_from_long<Ball>(sgn) * c);
                }
                return out;
            }
        }
        case ClassicalFactor::Kind::laguerre_family: {
            if constexpr (std::is_same_v<T, Rational>) {
                throw PreconditionError("laguerre_family requires the error-tracked backend");
            } else {
                // a_n = cos(vartheta + n theta) / n!
                Ball vt{factor.vartheta}, th{factor.theta};
                Ball inv_fact = coeff_from_long<Ball>(1);
                Ball arg = vt;
                out.set(0, cos(arg));
                for (std::size_t n = 1; n <= order; ++n) {
                    inv_fact = div_ui(inv_fact, n);
                    arg = arg + th;
                    out.set(n, cos(arg) * inv_fact);
                }
                return out;
            }
        }
    }
    throw Error("unreachable classical factor kind");
}

template <typename T>
TruncatedSeries<T> build_function(const FunctionSpec& spec, std::size_t order) {
    spec.validate();
    if constexpr (std::is_same_v<T, Rational>) {
        if (!spec.is_exact())
            throw PreconditionError("spec has irrational factors: use the error-tracked backend");
    }
    TruncatedSeries<T> out = gaussian_series<T>(spec.gauss_a, spec.lin_b, order);
    for (const auto& pf : spec.product_factors) out = mul(out, canonical_product_series<T>(pf, order));
    for (const auto& cf : spec.classical_factors) out = mul(out, classical_series<T>(cf, order));
    if (spec.monomial_power > 0) out = shift_up(out, spec.monomial_power);
    if (spec.scale != 1) out = scale(out, coeff_from_rational<T>(spec.scale));
    return out;
}

std::string to_string(Subclass s) {
    switch (s) {
        case Subclass::LPa: return "LPa";
        case Subclass::LPI: return "LPI";
        case Subclass::LP0: return "LP0";
    }
    return "?";
}

Subclass classify_subclass(const FunctionSpec& spec) {
    spec.validate();
    if (sgn(spec.gauss_a) < 0) return Subclass::LPa;
    if (sgn(spec.gauss_a) > 0)
        throw PreconditionError("gauss_a > 0 lies outside the Laguerre-Polya class");

    // a = 0: type-I requires lambda = 0 everywhere, all zeros of one sign,
    // and the effective linear coefficient compatible with that sign.
    bool lpi = true;
    bool pos = false, neg = false;
    Rational b_eff = spec.lin_b;
    for (const auto& pf : spec.product_factors) {
        if (pf.genus_param != 0) lpi = false;
        switch (pf.kind) {
            case ZeroKind::explicit_list:
                for (const auto& z : pf.zeros) (sgn(z) > 0 ? pos : neg) = true;
                break;
            case ZeroKind::exp_growth:
            case ZeroKind::arithmetic:
                (sgn(pf.scale) > 0 ? pos : neg) = true;
                break;
            case ZeroKind::power_log:
                pos = neg = true;  // symmetric pairs
                break;
        }
    }
    for (const auto& cf : spec.classical_factors) {
        switch (cf.kind) {
            case ClassicalFactor::Kind::exp:
                b_eff += 1;
                break;
            case ClassicalFactor::Kind::cos_sqrt:
                pos = true;  // zeros ((2k+1) pi / 2)^2
                break;
            case ClassicalFactor::Kind::recip_gamma:
                lpi = false;  // genus-1 zeros at the negative integers
                break;
            case ClassicalFactor::Kind::cos_affine:
            case ClassicalFactor::Kind::laguerre_family:
                pos = neg = true;
                break;
        }
    }
    if (pos && neg) lpi = false;
    if (pos && sgn(b_eff) > 0) lpi = false;
    if (neg && sgn(b_eff) < 0) lpi = false;
    return lpi ? Subclass::LPI : Subclass::LP0;
}

template TruncatedSeries<Rational> gaussian_series<Rational>(const Rational&, const Rational&, std::size_t);
template TruncatedSeries<Ball> gaussian_series<Ball>(const Rational&, const Rational&, std::size_t);
template TruncatedSeries<Rational> canonical_product_series<Rational>(const ZeroSequence&, std::size_t);
template TruncatedSeries<Ball> canonical_product_series<Ball>(const ZeroSequence&, std::size_t);
template TruncatedSeries<Rational> classical_series<Rational>(const ClassicalFactor&, std::size_t);
template TruncatedSeries<Ball> classical_series<Ball>(const ClassicalFactor&, std::size_t);
template TruncatedSeries<Rational> build_function<Rational>(const FunctionSpec&, std::size_t);
template TruncatedSeries<Ball> build_function<Ball>(const FunctionSpec&, std::size_t);

}  // namespace lpsign
