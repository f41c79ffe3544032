#include "lpsign/zero_sequence.hpp"

#include <algorithm>
#include <cmath>

#include "lpsign/errors.hpp"

namespace lpsign {

std::string to_string(ZeroKind k) {
    switch (k) {
        case ZeroKind::explicit_list: return "explicit";
        case ZeroKind::exp_growth: return "exp_growth";
        case ZeroKind::power_log: return "power_log";
        case ZeroKind::arithmetic: return "arithmetic";
    }
    return "?";
}

ZeroKind zero_kind_from_string(const std::string& s) {
    if (s == "explicit") return ZeroKind::explicit_list;
    if (s == "exp_growth") return ZeroKind::exp_growth;
    if (s == "power_log") return ZeroKind::power_log;
    if (s == "arithmetic") return ZeroKind::arithmetic;
    throw ParseError("unknown zero-sequence kind: '" + s + "'");
}

ZeroSequence ZeroSequence::explicit_zeros(std::vector<Rational> zs, int lambda) {
    ZeroSequence s;
    s.kind = ZeroKind::explicit_list;
    s.count = zs.size();
    s.zeros = std::move(zs);
    s.genus_param = lambda;
    s.declared_exponent = 0.0;
    s.validate();
    return s;
}

ZeroSequence ZeroSequence::exponential(Rational c, std::optional<Rational> base, std::size_t count,
                                       int lambda) {
    ZeroSequence s;
    s.kind = ZeroKind::exp_growth;
    s.scale = std::move(c);
    s.base = std::move(base);
    s.count = count;
    s.genus_param = lambda;
    s.declared_exponent = 0.0;
    s.validate();
    return s;
}

ZeroSequence ZeroSequence::power_log(Rational rho, std::size_t pairs, int lambda) {
    ZeroSequence s;
    s.kind = ZeroKind::power_log;
    s.power_log_rho = std::move(rho);
    s.count = 2 * pairs;
    s.genus_param = lambda;
    s.declared_exponent = s.power_log_rho.get_d();
    s.validate();
    return s;
}

ZeroSequence ZeroSequence::arithmetic(Rational c, std::size_t count) {
    ZeroSequence s;
    s.kind = ZeroKind::arithmetic;
    s.scale = std::move(c);
    s.count = count;
    s.genus_param = 1;
    s.declared_exponent = 1.0;
    s.validate();
    return s;
}

double ZeroSequence::natural_exponent() const {
    switch (kind) {
        case ZeroKind::explicit_list: return 0.0;
        case ZeroKind::exp_growth: return 0.0;
        case ZeroKind::power_log: return power_log_rho.get_d();
        case ZeroKind::arithmetic: return 1.0;
    }
    return 0.0;
}

void ZeroSequence::validate() const {
    if (genus_param != 0 && genus_param != 1)
        throw PreconditionError("zero sequence: lambda must be 0 or 1");
    switch (kind) {
        case ZeroKind::explicit_list:
            for (const auto& z : zeros)
                if (sgn(z) == 0) throw PreconditionError("zero sequence: zero entry equal to 0");
            if (count != zeros.size())
                throw PreconditionError("zero sequence: count must equal list length");
            break;
        case ZeroKind::exp_growth:
            if (sgn(scale) == 0) throw PreconditionError("zero sequence: scale c must be nonzero");
            if (base && !(*base > 1))
                throw PreconditionError("zero sequence: exponential base must exceed 1");
            if (count == 0) throw PreconditionError("zero sequence: empty rule-generated sequence");
            break;
        case ZeroKind::power_log:
            if (!(power_log_rho > 0) || power_log_rho > 2)
                throw PreconditionError("zero sequence: power-log rho must lie in (0, 2]");
            if (count == 0 || count % 2 != 0)
                throw PreconditionError("zero sequence: power-log kind materializes symmetric pairs");
            break;
        case ZeroKind::arithmetic:
            if (sgn(scale) == 0) throw PreconditionError("zero sequence: scale c must be nonzero");
            if (count == 0) throw PreconditionError("zero sequence: empty rule-generated sequence");
            break;
    }
    // lambda = 0 factors need sum 1/|x_n| < infinity over the full sequence;
    // lambda = 1 needs sum 1/x_n^2 < infinity. Both are decided by the kind's
    // closed form. power_log at rho = 2 is admitted for lambda = 1: the
    // materialized symmetric pairs cancel the exponential factors exactly, so
    // truncations are identical for either lambda.
    double expo = natural_exponent();
    if (genus_param == 0) {
        bool ok = kind == ZeroKind::explicit_list || kind == ZeroKind::exp_growth ||
                  (kind == ZeroKind::power_log && expo < 1.0);
        if (!ok)
            throw PreconditionError("zero sequence: lambda = 0 needs sum 1/|x_n| to converge for the declared kind");
    } else {
        bool ok = kind != ZeroKind::power_log || expo <= 2.0;
        if (!ok) throw PreconditionError("zero sequence: lambda = 1 needs sum 1/x_n^2 to converge");
    }
    if (std::abs(declared_exponent - expo) > 1e-12)
        throw PreconditionError("zero sequence: declared exponent of convergence does not match the kind");
}

bool ZeroSequence::is_exact() const {
    switch (kind) {
        case ZeroKind::explicit_list:
        case ZeroKind::arithmetic: return true;
        case ZeroKind::exp_growth: return base.has_value();
        case ZeroKind::power_log: return false;
    }
    return false;
}

std::size_t ZeroSequence::materialized_count() const {
    return kind == ZeroKind::explicit_list ? zeros.size() : count;
}

std::vector<Rational> ZeroSequence::materialize_exact() const {
    validate();
    if (!is_exact())
        throw PreconditionError("zero sequence: kind '" + to_string(kind) +
                                "' does not materialize to exact rationals");
    std::vector<Rational> out;
    switch (kind) {
        case ZeroKind::explicit_list: {
            out = zeros;
            std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) {
                Rational aa = abs(a), ab = abs(b);
                if (aa != ab) return aa < ab;
                return a < b;  // negative first on ties, per the symmetric-pair convention
            });
            break;
        }
        case ZeroKind::exp_growth: {
            Rational x = scale;
            for (std::size_t n = 1; n <= count; ++n) {
                x *= *base;
                out.push_back(x);
            }
            break;
        }
        case ZeroKind::arithmetic: {
            for (std::size_t n = 1; n <= count; ++n)
                out.push_back(scale * Rational(static_cast<unsigned long>(n)));
            break;
        }
        case ZeroKind::power_log: break;  // unreachable
    }
    return out;
}

std::vector<Ball> ZeroSequence::materialize_ball() const {
    validate();
    std::vector<Ball> out;
    if (is_exact()) {
        for (const auto& z : materialize_exact()) out.emplace_back(z);
        return out;
    }
    switch (kind) {
        case ZeroKind::exp_growth: {
            // c * e^n with a one-ulp enclosure of each power.
            Ball c{scale};
            for (std::size_t n = 1; n <= count; ++n)
                out.push_back(c * exp(Ball(static_cast<long>(n))));
            break;
        }
        case ZeroKind::power_log: {
            Ball inv_rho = Ball(1L) / Ball(power_log_rho);
            for (std::size_t n = 1; 2 * n <= count; ++n) {
                Ball arg = Ball(static_cast<long>(n)) * log(Ball(static_cast<long>(n + 1)));
                Ball y = exp(log(arg) * inv_rho);  // arg^(1/rho), fully error-tracked
                out.push_back(-y);                 // y_{2n-1} = -y_{2n}
                out.push_back(y);
            }
            break;
        }
        default: break;  // handled by the exact path
    }
    return out;
}

}  // namespace lpsign
