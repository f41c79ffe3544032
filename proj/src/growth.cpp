#include "lpsign/growth.hpp"

#include <array>
#include <cmath>

#include "lpsign/errors.hpp"

namespace lpsign {

namespace {

template <typename T>
void check_window(const TruncatedSeries<T>& s, std::size_t lo, std::size_t hi) {
    if (lo < 1 || lo > hi || hi > s.order())
        throw PreconditionError("growth window must satisfy 1 <= lo <= hi <= N");
}

/// Least-squares fit of y ~ c0*(n log n) + c1*n + c2*log n + c3; returns 1/c0.
double stirling_fit(const std::vector<std::pair<std::size_t, double>>& ys) {
    constexpr int K = 4;
    std::array<std::array<double, K>, K> G{};
    std::array<double, K> rhs{};
    for (const auto& [n, y] : ys) {
        double ln = std::log(static_cast<double>(n));
        std::array<double, K> basis{static_cast<double>(n) * ln, static_cast<double>(n), ln, 1.0};
        for (int i = 0; i < K; ++i) {
            rhs[i] += basis[i] * y;
            for (int j = 0; j < K; ++j) G[i][j] += basis[i] * basis[j];
        }
    }
    // Gaussian elimination with partial pivoting.
    std::array<std::array<double, K + 1>, K> m{};
    for (int i = 0; i < K; ++i) {
        for (int j = 0; j < K; ++j) m[i][j] = G[i][j];
        m[i][K] = rhs[i];
    }
    for (int col = 0; col < K; ++col) {
        int piv = col;
        for (int r = col + 1; r < K; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        if (m[col][col] == 0.0) return std::numeric_limits<double>::quiet_NaN();
        for (int r = 0; r < K; ++r) {
            if (r == col) continue;
            double f = m[r][col] / m[col][col];
            for (int j = col; j <= K; ++j) m[r][j] -= f * m[col][j];
        }
    }
    double c0 = m[0][K] / m[0][0];
    return c0 != 0.0 ? 1.0 / c0 : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

template <typename T>
GrowthEstimate order_estimate(const TruncatedSeries<T>& s, std::size_t window_lo, std::size_t window_hi) {
    check_window(s, window_lo, window_hi);
    GrowthEstimate est;
    est.window_lo = window_lo;
    est.window_hi = window_hi;
    std::vector<std::pair<std::size_t, double>> fit_data;
    for (std::size_t n = std::max<std::size_t>(window_lo, 2); n <= window_hi; ++n) {
        if (!is_nonzero(certified_sign(s[n]))) continue;
        if (!certified_below_one(s[n])) continue;
        double neg_log = -log_abs_double(s[n]);
        double sample = static_cast<double>(n) * std::log(static_cast<double>(n)) / neg_log;
        est.order_samples.emplace_back(n, sample);
        fit_data.emplace_back(n, neg_log);
        if (sample > est.rho_hat) est.rho_hat = sample;
    }
    if (est.order_samples.size() < 3)
        throw PreconditionError("order_estimate: insufficient certified coefficients in window");
    est.rho_hat_fit = stirling_fit(fit_data);
    return est;
}

template <typename T>
GrowthEstimate type_statistic(const TruncatedSeries<T>& s, double rho, std::size_t window_lo,
                              std::size_t window_hi) {
    if (!(rho > 0)) throw PreconditionError("type_statistic: rho must be positive");
    check_window(s, window_lo, window_hi);
    GrowthEstimate est;
    est.rho_used = rho;
    est.window_lo = window_lo;
    est.window_hi = window_hi;
    const double e_rho = std::exp(1.0) * rho;
    for (std::size_t n = window_lo; n <= window_hi; ++n) {
        if (!is_nonzero(certified_sign(s[n]))) continue;
        double la = log_abs_double(s[n]);
        double nd = static_cast<double>(n);
        double stat = nd * std::exp(rho / nd * la) / e_rho;
        est.type_samples.emplace_back(n, stat);
        if (stat > est.sigma_hat) est.sigma_hat = stat;
        if (rho == 2.0) est.raw_q2_samples.emplace_back(n, nd * std::exp(2.0 / nd * la));
    }
    if (est.type_samples.empty())
        throw PreconditionError("type_statistic: insufficient certified coefficients in window");
    return est;
}

template GrowthEstimate order_estimate<Rational>(const TruncatedSeries<Rational>&, std::size_t, std::size_t);
template GrowthEstimate order_estimate<Ball>(const TruncatedSeries<Ball>&, std::size_t, std::size_t);
template GrowthEstimate type_statistic<Rational>(const TruncatedSeries<Rational>&, double, std::size_t, std::size_t);
template GrowthEstimate type_statistic<Ball>(const TruncatedSeries<Ball>&, double, std::size_t, std::size_t);

bool category_less(const Category& a, const Category& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.type < b.type;
}

Category category_max(const Category& a, const Category& b) { return category_less(a, b) ? b : a; }

namespace {

unsigned genus_for_kind(const ZeroSequence& zeros) {
    switch (zeros.kind) {
        case ZeroKind::explicit_list:
        case ZeroKind::exp_growth:
            return 0;
        case ZeroKind::arithmetic:
            return 1;
        case ZeroKind::power_log: {
            // sum |y_n|^-t = sum 2 (n log(n+1))^(-t/rho) converges iff t > rho
            // (the log factor does not rescue t = rho), so the genus is the
            // smallest integer p with p + 1 > rho, i.e. floor(rho) on (0, 2].
            return static_cast<unsigned>(std::floor(zeros.power_log_rho.get_d()));
        }
    }
    return 0;
}

std::vector<double> materialized_magnitudes(const ZeroSequence& zeros) {
    std::vector<double> mags;
    if (zeros.is_exact()) {
        for (const auto& x : zeros.materialize_exact()) mags.push_back(std::fabs(x.get_d()));
    } else {
        for (const auto& x : zeros.materialize_ball()) mags.push_back(std::fabs(x.value().to_double()));
    }
    return mags;
}

}  // namespace

DensityReport exponent_and_genus(const ZeroSequence& zeros) {
    zeros.validate();
    DensityReport rep;
    rep.lambda_conv = zeros.natural_exponent();
    rep.genus = genus_for_kind(zeros);
    double t = static_cast<double>(rep.genus) + 1.0;
    for (double m : materialized_magnitudes(zeros)) rep.genus_partial_sum += std::pow(m, -t);
    return rep;
}

DensityReport superior_density_estimate(const ZeroSequence& zeros, double lambda,
                                        const std::vector<double>& radii) {
    zeros.validate();
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] <= 0 || (i > 0 && radii[i] <= radii[i - 1]))
            throw PreconditionError("superior_density_estimate: radii must be positive and increasing");
    }
    DensityReport rep;
    rep.lambda_conv = lambda;
    rep.genus = genus_for_kind(zeros);
    auto mags = materialized_magnitudes(zeros);
    std::sort(mags.begin(), mags.end());
    for (double r : radii) {
        auto it = std::upper_bound(mags.begin(), mags.end(), r);
        double count = static_cast<double>(it - mags.begin());
        rep.delta_samples.emplace_back(r, count / std::pow(r, lambda));
    }
    std::size_t start = radii.size() / 2;
    for (std::size_t i = start; i < rep.delta_samples.size(); ++i)
        rep.delta_hat = std::max(rep.delta_hat, rep.delta_samples[i].second);
    return rep;
}

double lindelof_delta(const ZeroSequence& zeros, unsigned rho, double alpha_rho, double r) {
    if (rho == 0) throw PreconditionError("lindelof_delta: rho must be a positive integer");
    if (!(r > 0)) throw PreconditionError("lindelof_delta: r must be positive");
    zeros.validate();
    double acc = 0.0;
    auto add_zero = [&](double x) {
        if (std::fabs(x) < r) acc += std::pow(x, -static_cast<double>(rho));
    };
    if (zeros.is_exact()) {
        for (const auto& x : zeros.materialize_exact()) add_zero(x.get_d());
    } else {
        for (const auto& x : zeros.materialize_ball()) add_zero(x.value().to_double());
    }
    return std::fabs(alpha_rho + acc / static_cast<double>(rho));
}

}  // namespace lpsign
