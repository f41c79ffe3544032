#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lpsign/series.hpp"
#include "lpsign/sign.hpp"

namespace lpsign {

/// Certified signs of a coefficient sequence, n = 0..N.
struct SignSequence {
    std::vector<Sign> entries;
    std::string policy;  // certification policy, e.g. "exact" or "ball(256)"

    std::size_t size() const { return entries.size(); }
    Sign at(std::size_t n) const { return entries.at(n); }
};

template <typename T>
SignSequence sign_sequence(const TruncatedSeries<T>& s) {
    SignSequence out;
    out.entries.reserve(s.order() + 1);
    for (std::size_t n = 0; n <= s.order(); ++n) out.entries.push_back(certified_sign(s[n]));
    if constexpr (std::is_same_v<T, Rational>) {
        out.policy = "exact";
    } else {
        out.policy = "ball(" + std::to_string(working_precision_bits()) + ")";
    }
    return out;
}

/// Alternating-pair analysis of a_{n-1} a_{n+1} <= 0 over n in [1, N-1].
struct TailReport {
    std::size_t horizon = 0;  // N: the last index with a known sign
    /// max(violations), or 0 when none: the smallest n0 making
    /// "a_{n-1} a_{n+1} <= 0 for all n0 < n < horizon" literally true.
    std::size_t n0_empirical = 0;
    std::vector<std::size_t> violations;             // both neighbors certified, product > 0
    std::vector<std::size_t> indeterminate_indices;  // a neighbor is indeterminate: unresolved
    /// False when the last checkable pair is itself a violation, i.e. no
    /// clean tail was observed at all.
    bool clean_tail_observed = true;
};

/// Violations require both neighbor signs certified nonzero; pairs touching
/// an indeterminate entry are reported separately, never counted.
TailReport tail_check(const SignSequence& signs);

/// Start indices where the +/-1 pattern matches certified entries exactly
/// (0 and indeterminate never match).
std::vector<std::size_t> pattern_scan(const SignSequence& signs, const std::vector<int>& pattern);

/// "+", "-", "0", "?" rendering.
std::string render(const SignSequence& signs);

}  // namespace lpsign
