#pragma once

#include "lpsign/ball.hpp"

namespace lpsign {

// High-precision decimal constants, 110 digits after rounding.
// gamma: OEIS A001620; pi: OEIS A000796.
inline constexpr const char* kEulerGammaDigits =
    "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467093694706329174674951463144724"
    "98071";
inline constexpr const char* kPiDigits =
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798214808651"
    "32823";

/// Enclosures of the embedded constants at working precision; the radius
/// covers both the parse rounding and the finite digit count.
Ball euler_gamma_constant();
Ball pi_constant();

}  // namespace lpsign
