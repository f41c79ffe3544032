#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lpsign/series.hpp"
#include "lpsign/zero_sequence.hpp"

namespace lpsign {

/// Coefficient-based growth diagnostics. The limsup formulas are asymptotic;
/// at truncation scale the report carries windowed maxima plus the full
/// sample lists so callers can inspect convergence. rho_hat_fit removes the
/// leading Stirling-scale finite-size bias of the raw windowed maximum by
/// fitting -log|a_n| against {n log n, n, log n, 1}.
struct GrowthEstimate {
    double rho_hat = 0.0;      // max over window of n log n / (-log|a_n|)
    double rho_hat_fit = 0.0;  // bias-corrected order estimate
    double sigma_hat = 0.0;    // max over window of n |a_n|^(rho/n) / (e rho)
    double rho_used = 0.0;     // rho parameter behind sigma_hat
    std::size_t window_lo = 0, window_hi = 0;
    std::vector<std::pair<std::size_t, double>> order_samples;
    std::vector<std::pair<std::size_t, double>> type_samples;
    std::vector<std::pair<std::size_t, double>> raw_q2_samples;  // n |a_n|^(2/n), when rho = 2
};

/// Order estimate over certified samples with |a_n| < 1; needs >= 3 samples.
template <typename T>
GrowthEstimate order_estimate(const TruncatedSeries<T>& s, std::size_t window_lo, std::size_t window_hi);

/// Type statistic at the given rho > 0; also reports the raw n |a_n|^(2/n)
/// samples when rho = 2 (the Question-A statistic).
template <typename T>
GrowthEstimate type_statistic(const TruncatedSeries<T>& s, double rho, std::size_t window_lo,
                              std::size_t window_hi);

/// Growth category (order, type) with lexicographic comparison; products of
/// entire functions take the max category.
struct Category {
    double order = 0.0;
    double type = 0.0;
};
bool category_less(const Category& a, const Category& b);
Category category_max(const Category& a, const Category& b);

/// Zero-based diagnostics: exponent of convergence and genus come from the
/// declared kind's closed form, never from numerical extrapolation.
struct DensityReport {
    double lambda_conv = 0.0;
    unsigned genus = 0;
    /// Partial sum sum_{n <= count} |x_n|^-(genus+1) (numeric diagnostic).
    double genus_partial_sum = 0.0;
    std::vector<std::pair<double, double>> delta_samples;  // (r, n(r)/r^lambda)
    double delta_hat = 0.0;  // max over the upper half of the radii list
};

DensityReport exponent_and_genus(const ZeroSequence& zeros);

DensityReport superior_density_estimate(const ZeroSequence& zeros, double lambda,
                                        const std::vector<double>& radii);

/// |alpha_rho + (1/rho) sum_{|x_n| < r} x_n^-rho| over the materialized zeros.
double lindelof_delta(const ZeroSequence& zeros, unsigned rho, double alpha_rho, double r);

}  // namespace lpsign
