#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lpsign/coeff_traits.hpp"
#include "lpsign/errors.hpp"

namespace lpsign {

/// Maclaurin expansion truncated at a fixed order N: coefficients a_0..a_N.
/// Arithmetic never reads or writes beyond the truncation order; combining
/// two series truncates to the smaller order. Immutable in spirit: all
/// operations return fresh values.
template <typename T>
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}

    static TruncatedSeries from_coefficients(std::vector<T> coeffs) {
        if (coeffs.empty()) throw PreconditionError("series needs at least the constant term");
        TruncatedSeries s(coeffs.size() - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const T& operator[](std::size_t i) const { return c_.at(i); }
    void set(std::size_t i, T v) { c_.at(i) = std::move(v); }
    const std::vector<T>& coefficients() const { return c_; }

    TruncatedSeries truncated(std::size_t new_order) const {
        TruncatedSeries out(new_order);
        for (std::size_t i = 0; i <= new_order && i <= order(); ++i) out.c_[i] = c_[i];
        return out;
    }

  private:
    std::vector<T> c_;
};

using RationalSeries = TruncatedSeries<Rational>;
using BallSeries = TruncatedSeries<Ball>;

template <typename T>
TruncatedSeries<T> add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries<T> out(n);
    for (std::size_t i = 0; i <= n; ++i) out.set(i, a[i] + b[i]);
    return out;
}

/// Cauchy product, truncated at min(N_a, N_b).
template <typename T>
TruncatedSeries<T> mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries<T> out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        T acc = coeff_from_long<T>(0);
        for (std::size_t k = 0; k <= i; ++k) acc = acc + a[k] * b[i - k];
        out.set(i, std::move(acc));
    }
    return out;
}

template <typename T>
TruncatedSeries<T> scale(const TruncatedSeries<T>& a, const T& c) {
    TruncatedSeries<T> out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) out.set(i, c * a[i]);
    return out;
}

/// Multiply by the linear factor (1 + c*z) in O(N).
template <typename T>
TruncatedSeries<T> mul_linear(const TruncatedSeries<T>& a, const T& c) {
    TruncatedSeries<T> out(a.order());
    out.set(0, a[0]);
    for (std::size_t i = 1; i <= a.order(); ++i) out.set(i, a[i] + c * a[i - 1]);
    return out;
}

/// Multiply by z^k (drops the top k coefficients off the truncation).
template <typename T>
TruncatedSeries<T> shift_up(const TruncatedSeries<T>& a, std::size_t k) {
    TruncatedSeries<T> out(a.order());
    for (std::size_t i = a.order() + 1; i-- > k;) out.set(i, a[i - k]);
    return out;
}

/// exp of a series with zero constant term, via the differential recurrence
///   (n+1) e_{n+1} = sum_{k=0}^{n} (k+1) s_{k+1} e_{n-k},  e_0 = 1.
/// Exact on the rational backend.
template <typename T>
TruncatedSeries<T> exp(const TruncatedSeries<T>& s) {
    if (!is_exact_zero(s[0]))
        throw PreconditionError("series exp requires zero constant term; scale by exp(s_0) explicitly");
    std::size_t n_max = s.order();
    TruncatedSeries<T> e(n_max);
    e.set(0, coeff_from_long<T>(1));
    for (std::size_t n = 0; n + 1 <= n_max; ++n) {
        T acc = coeff_from_long<T>(0);
        for (std::size_t k = 0; k <= n; ++k) {
            if (is_exact_zero(s[k + 1])) continue;
            acc = acc + coeff_from_long<T>(static_cast<long>(k + 1)) * s[k + 1] * e[n - k];
        }
        e.set(n + 1, div_by_uint(acc, n + 1));
    }
    return e;
}

/// Parity split: (even part, odd part); the two parts recompose to the input.
template <typename T>
std::pair<TruncatedSeries<T>, TruncatedSeries<T>> even_odd_split(const TruncatedSeries<T>& s) {
    TruncatedSeries<T> even(s.order()), odd(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (i % 2 == 0)
            even.set(i, s[i]);
        else
            odd.set(i, s[i]);
    }
    return {std::move(even), std::move(odd)};
}

/// Evaluates the truncation at the purely imaginary point it:
///   s(it) = re + i*im, re = sum (-1)^n a_{2n} t^{2n}, im = sum (-1)^n a_{2n+1} t^{2n+1}.
template <typename T>
std::pair<T, T> eval_imaginary(const TruncatedSeries<T>& s, const T& t) {
    T re = coeff_from_long<T>(0), im = coeff_from_long<T>(0);
    T tp = coeff_from_long<T>(1);  // t^j
    for (std::size_t j = 0; j <= s.order(); ++j) {
        long sgn = (j / 2) % 2 == 0 ? 1 : -1;
        T term = coeff_from_long<T>(sgn) * s[j] * tp;
        if (j % 2 == 0)
            re = re + term;
        else
            im = im + term;
        if (j < s.order()) tp = tp * t;
    }
    return {std::move(re), std::move(im)};
}

}  // namespace lpsign
