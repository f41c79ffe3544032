#pragma once

#include <string>

namespace lpsign {

/// Certified sign of a quantity. `indeterminate` means the tracked error
/// bound does not separate the value from zero.
enum class Sign : int {
    minus = -1,
    zero = 0,
    plus = 1,
    indeterminate = 2,
};

inline bool is_certain(Sign s) { return s != Sign::indeterminate; }
inline bool is_nonzero(Sign s) { return s == Sign::plus || s == Sign::minus; }

inline int sign_value(Sign s) { return static_cast<int>(s); }

inline char sign_char(Sign s) {
    switch (s) {
        case Sign::minus: return '-';
        case Sign::zero: return '0';
        case Sign::plus: return '+';
        default: return '?';
    }
}

inline Sign sign_from_int(int v) {
    if (v > 0) return Sign::plus;
    if (v < 0) return Sign::minus;
    return Sign::zero;
}

}  // namespace lpsign
