#pragma once

#include <cmath>

#include "lpns/errors.hpp"

namespace lpns {

/// Radial cutoff profile. `smooth` is the production profile; `sharp`
/// replaces every symbol by the indicator of its nominal support, which
/// makes adjacent blocks overlap. Sharp is a diagnostics-only negative
/// control: it deliberately breaks the partition of unity and the Bony
/// identity while keeping the same support geometry.
enum class CutoffKind { smooth, sharp };

inline constexpr double chi_plateau_radius = 0.75;        // 3/4
inline constexpr double chi_support_radius = 4.0 / 3.0;   // 4/3

/// chi(r): 1 on [0, 3/4], 0 on [4/3, inf), C-infinity monotone transition
/// via sigma(t) = theta(t)/(theta(t) + theta(1-t)), theta(t) = exp(-1/t).
inline double chi(double r, CutoffKind kind = CutoffKind::smooth) {
    if (r < 0.0) throw invalid_parameter("chi argument must be nonnegative");
    if (kind == CutoffKind::sharp) return r <= chi_support_radius ? 1.0 : 0.0;
    if (r <= chi_plateau_radius) return 1.0;
    if (r >= chi_support_radius) return 0.0;
    const double t = (chi_support_radius - r) / (chi_support_radius - chi_plateau_radius);
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

/// Low-pass symbol of S_j at radius |k|: chi(|k| / 2^j).
inline double low_pass_symbol(int j, double k_abs, CutoffKind kind = CutoffKind::smooth) {
    return chi(k_abs / std::ldexp(1.0, j), kind);
}

/// Block symbol of Delta_j at radius |k|.
/// Smooth: chi(|k|/2^{j+1}) - chi(|k|/2^j), supported in
/// (3/4) 2^j <= |k| <= (4/3) 2^{j+1}. Sharp: the indicator of that same
/// annulus (adjacent sharp blocks overlap by construction).
inline double block_symbol(int j, double k_abs, CutoffKind kind = CutoffKind::smooth) {
    const double scale = std::ldexp(1.0, j);
    if (kind == CutoffKind::sharp) {
        return (k_abs >= chi_plateau_radius * scale &&
                k_abs <= chi_support_radius * 2.0 * scale)
                   ? 1.0
                   : 0.0;
    }
    return chi(k_abs / (2.0 * scale)) - chi(k_abs / scale);
}

}  // namespace lpns
