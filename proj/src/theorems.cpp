#include "lpsign/theorems.hpp"

#include <cmath>

#include "lpsign/errors.hpp"

namespace lpsign {

namespace {

/// Falling-factorial basis polynomial with j factors starting at `start`:
/// (x - start)(x - start - 1) ... (x - start - j + 1).
ExactPolynomial falling(std::size_t j, long start) {
    ExactPolynomial out = ExactPolynomial::constant(Rational(1));
    for (std::size_t i = 0; i < j; ++i)
        out = out * ExactPolynomial::from_coefficients({Rational(-(start + static_cast<long>(i))), Rational(1)});
    return out;
}

}  // namespace

Thm2Report thm2_n0_bound(const ExactPolynomial& P, const Rational& a, std::size_t horizon) {
    if (!(sgn(a) < 0)) throw PreconditionError("thm2_n0_bound: a must be negative");
    if (horizon < 4) throw PreconditionError("thm2_n0_bound: horizon too short");
    auto cert = is_hyperbolic(P);
    if (!cert.hyperbolic) throw PreconditionError("thm2_n0_bound: P is not hyperbolic");

    Thm2Report rep;
    rep.horizon = horizon;
    // b_0..b_{2m}, odd degree padded with b_{2m} = 0.
    std::size_t m = P.degree() <= 0 ? 0 : (static_cast<std::size_t>(P.degree()) + 1) / 2;
    // P1(x) = sum_j a^(m-j) b_{2j} x(x-1)...(x-j+1)
    // P2(x) = sum_j a^(m-1-j) b_{2j+1} (x-1)(x-2)...(x-j)
    ExactPolynomial p1, p2;
    for (std::size_t j = 0; j <= m; ++j) {
        Rational coef = pow(a, static_cast<long>(m - j)) * P.coeff(2 * j);
        p1 = p1 + coef * falling(j, 0);
    }
    for (std::size_t j = 0; j + 1 <= m; ++j) {
        Rational coef = pow(a, static_cast<long>(m - 1 - j)) * P.coeff(2 * j + 1);
        p2 = p2 + coef * falling(j, 1);
    }
    rep.p1 = p1;
    rep.p2 = p2;

    Rational bound(0);
    if (!p1.is_zero() && p1.degree() > 0) bound = cauchy_root_bound(p1);
    if (!p2.is_zero() && p2.degree() > 0) {
        Rational b2 = cauchy_root_bound(p2);
        if (b2 > bound) bound = b2;
    }
    rep.k0 = static_cast<long>(ceil(bound).get_si());
    rep.n0_bound = std::max<std::size_t>(2 * static_cast<std::size_t>(rep.k0) + 1, 2 * m + 1);

    // Exact coefficients of exp(a z^2) P(z) up to the horizon.
    RationalSeries gauss = gaussian_series<Rational>(a, Rational(0), horizon);
    RationalSeries pser(horizon);
    for (long i = 0; i <= P.degree() && i <= static_cast<long>(horizon); ++i)
        pser.set(static_cast<std::size_t>(i), P.coeff(static_cast<std::size_t>(i)));
    RationalSeries phi = mul(gauss, pser);

    TailReport tail = tail_check(sign_sequence(phi));
    rep.violations = tail.violations;
    rep.empirical_first_clean = tail.n0_empirical;
    rep.bound_valid = rep.empirical_first_clean <= rep.n0_bound;

    // Exact identity at odd n = 2k+1 for k >= m.
    rep.identity_holds = true;
    for (std::size_t k = m; 2 * k + 2 <= horizon; ++k) {
        Rational lhs = phi[2 * k] * phi[2 * k + 2];
        Rational rhs = pow(a, 2 * (static_cast<long>(k) - static_cast<long>(m)) + 1) * p1.eval(Rational(static_cast<unsigned long>(k))) *
                       p1.eval(Rational(static_cast<unsigned long>(k + 1))) /
                       (Rational(factorial(k)) * Rational(factorial(k + 1)));
        if (lhs != rhs) {
            rep.identity_holds = false;
            break;
        }
    }
    return rep;
}

std::string to_string(Thm1Report::Verdict v) {
    switch (v) {
        case Thm1Report::Verdict::satisfied: return "hypotheses satisfied within horizon";
        case Thm1Report::Verdict::violated_in_tail: return "violated in the tail half of the horizon";
        case Thm1Report::Verdict::growth_outside: return "growth statistic outside the (0, inf) window";
    }
    return "?";
}

template <typename T>
Thm1Report thm1_hypothesis_check(const TruncatedSeries<T>& s, std::size_t horizon,
                                 std::size_t window_lo, std::size_t window_hi) {
    if (horizon > s.order()) throw PreconditionError("thm1_hypothesis_check: horizon beyond truncation");
    Thm1Report rep;
    rep.tail = tail_check(sign_sequence(s.truncated(horizon)));
    bool growth_ok = false;
    try {
        rep.growth = type_statistic(s, 2.0, window_lo, window_hi);
        growth_ok = rep.growth->sigma_hat > 0 && std::isfinite(rep.growth->sigma_hat);
    } catch (const PreconditionError&) {
        growth_ok = false;  // e.g. polynomial truncations: nothing certified in the window
    }
    bool tail_clean = true;
    for (std::size_t n : rep.tail.violations)
        if (n > horizon / 2) tail_clean = false;

    if (!growth_ok)
        rep.verdict = Thm1Report::Verdict::growth_outside;
    else if (!tail_clean)
        rep.verdict = Thm1Report::Verdict::violated_in_tail;
    else
        rep.verdict = Thm1Report::Verdict::satisfied;
    rep.message = to_string(rep.verdict);
    return rep;
}

template Thm1Report thm1_hypothesis_check<Rational>(const TruncatedSeries<Rational>&, std::size_t,
                                                    std::size_t, std::size_t);
template Thm1Report thm1_hypothesis_check<Ball>(const TruncatedSeries<Ball>&, std::size_t, std::size_t,
                                                std::size_t);

Thm3Construction thm3_construct(const Rational& rho, std::size_t count1, std::size_t count2,
                                Thm3Base base) {
    if (sgn(rho) < 0 || rho > 2)
        throw PreconditionError("thm3_construct: rho must lie in [0, 2]");
    if (count1 < 1 || (sgn(rho) > 0 && count2 < 1))
        throw PreconditionError("thm3_construct: counts must be >= 1");
    Thm3Construction c;
    c.target_order = rho;
    c.count1 = count1;
    c.count2 = sgn(rho) > 0 ? count2 : 0;
    c.base = base;
    std::optional<Rational> b;
    if (base == Thm3Base::exact3) b = Rational(3);
    if (sgn(rho) > 0) {
        auto dens = exponent_and_genus(ZeroSequence::power_log(rho, 1, 1));
        int lambda2 = std::min<unsigned>(dens.genus, 1);
        c.spec.product_factors.push_back(ZeroSequence::power_log(rho, count2, lambda2));
    }
    c.spec.product_factors.push_back(ZeroSequence::exponential(Rational(1), b, count1, 0));
    return c;
}

TailReport thm3_violations(const Thm3Construction& c, const Rational& a, std::size_t horizon) {
    if (!(sgn(a) < 0)) throw PreconditionError("thm3_violations: a must be negative");
    FunctionSpec spec = c.spec;
    spec.gauss_a = a;
    if (spec.is_exact()) {
        auto phi = build_function<Rational>(spec, horizon);
        return tail_check(sign_sequence(phi));
    }
    auto phi = build_function<Ball>(spec, horizon);
    return tail_check(sign_sequence(phi));
}

namespace {

/// A spec is even (odd) when b = 0, every product factor is symmetric under
/// negation, there are no classical factors, and k is even (odd).
std::optional<std::string> spec_parity(const FunctionSpec& spec) {
    if (sgn(spec.lin_b) != 0) return std::nullopt;
    if (!spec.classical_factors.empty()) return std::nullopt;
    for (const auto& pf : spec.product_factors) {
        if (pf.kind == ZeroKind::power_log) continue;  // symmetric by construction
        if (pf.kind == ZeroKind::explicit_list) {
            auto zs = pf.zeros;
            std::sort(zs.begin(), zs.end());
            for (const auto& z : zs) {
                Rational neg = -z;
                if (!std::binary_search(zs.begin(), zs.end(), neg)) return std::nullopt;
            }
            continue;
        }
        return std::nullopt;  // exp_growth / arithmetic are one-sided
    }
    return spec.monomial_power % 2 == 0 ? std::optional<std::string>("even")
                                        : std::optional<std::string>("odd");
}

}  // namespace

Corollary1Report corollary1_verify(const FunctionSpec& spec, std::size_t horizon) {
    if (!(sgn(spec.gauss_a) < 0))
        throw PreconditionError("corollary1_verify: spec must carry a Gaussian factor with a < 0");
    auto parity = spec_parity(spec);
    if (!parity) throw PreconditionError("corollary1_verify: spec is neither even nor odd");
    if (horizon < 8) throw PreconditionError("corollary1_verify: horizon too short");

    Corollary1Report rep;
    rep.parity = *parity;
    std::size_t wlo = std::max<std::size_t>(1, horizon / 2);
    if (spec.is_exact()) {
        auto phi = build_function<Rational>(spec, horizon);
        rep.tail = tail_check(sign_sequence(phi));
        rep.growth = type_statistic(phi, 2.0, wlo, horizon);
    } else {
        auto phi = build_function<Ball>(spec, horizon);
        rep.tail = tail_check(sign_sequence(phi));
        rep.growth = type_statistic(phi, 2.0, wlo, horizon);
    }
    rep.zero_violations = rep.tail.violations.empty();
    rep.statistic_in_window = rep.growth.sigma_hat > 0 && std::isfinite(rep.growth.sigma_hat);
    return rep;
}

}  // namespace lpsign
