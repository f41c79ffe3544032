#pragma once

#include "lpsign/ball.hpp"
#include "lpsign/errors.hpp"
#include "lpsign/rational.hpp"

namespace lpsign {

// Uniform coefficient interface shared by the exact-rational and
// error-tracked float backends. Series/function code is templated on the
// coefficient type and relies only on these shims plus field operators.

inline Sign certified_sign(const Ball& b) { return b.certified_sign(); }

inline bool is_exact_zero(const Ball& b) { return b.is_exact_zero(); }

inline Rational div_by_uint(const Rational& q, unsigned long n) {
    if (n == 0) throw PreconditionError("division by zero");
    return q / Rational(static_cast<unsigned long>(n));
}
inline Ball div_by_uint(const Ball& b, unsigned long n) { return div_ui(b, n); }

template <typename T>
T coeff_from_long(long v) {
    return T(v);
}

template <typename T>
T coeff_from_rational(const Rational& q);

template <>
inline Rational coeff_from_rational<Rational>(const Rational& q) {
    return q;
}
template <>
inline Ball coeff_from_rational<Ball>(const Rational& q) {
    return Ball(q);
}

/// True when the magnitude is certifiably < 1 (used by growth estimators).
inline bool certified_below_one(const Rational& q) { return abs(q) < 1; }
inline bool certified_below_one(const Ball& b) { return b.abs_upper() < BigFloat(1L); }

inline std::string coeff_to_string(const Rational& q) { return to_string(q); }
inline std::string coeff_to_string(const Ball& b) { return b.to_string(); }

template <typename T>
struct BackendName;
template <>
struct BackendName<Rational> {
    static constexpr const char* value = "exact";
};
template <>
struct BackendName<Ball> {
    static constexpr const char* value = "ball";
};

}  // namespace lpsign
