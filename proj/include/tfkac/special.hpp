#pragma once

#include "tfkac/core.hpp"

namespace tfkac {

/// Scaled lower incomplete gamma: gamma(s,z) * z^{-s}, entire in z, equal to
/// 1/s at z = 0. Valid for s > 0 and Re(z) >= 0 (small-|z| power series,
/// Lentz continued fraction for the upper function otherwise).
Complex lower_incomplete_gamma_scaled(double s, Complex z);

} // namespace tfkac
