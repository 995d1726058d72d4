#pragma once

#include <cmath>
#include <limits>

#include "lpns/field.hpp"
#include "lpns/grid.hpp"
#include "lpns/summation.hpp"

namespace lpns {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// L^p norm by grid quadrature: (h^n sum |f(x_i)|^p)^{1/p}, max for p = inf.
/// Vector fields use the pointwise Euclidean magnitude. Exact for p = 2 on
/// band-limited fields (discrete Parseval); a quadrature approximation of the
/// continuum norm otherwise.
inline double lebesgue_norm(const Field& f, double p) {
    if (!(p >= 1.0))
        throw invalid_parameter("Lebesgue exponent must satisfy p >= 1");
    const std::size_t count = f.grid().point_count();
    if (p == infinity) {
        double m = 0.0;
        for (std::size_t i = 0; i < count; ++i) m = std::max(m, f.magnitude_at(i));
        return m;
    }
    const int n = f.grid().dim();
    double cell = 1.0;
    for (int d = 0; d < n; ++d) cell *= f.grid().spacing();
    CompensatedSum acc;
    if (p == 2.0) {
        for (std::size_t i = 0; i < count; ++i) {
            if (f.components() == 1) {
                const double v = f.at(0, i);
                acc.add(v * v);
            } else {
                for (int c = 0; c < f.components(); ++c) {
                    const double v = f.at(c, i);
                    acc.add(v * v);
                }
            }
        }
        return std::sqrt(cell * acc.value());
    }
    if (p == 1.0) {
        for (std::size_t i = 0; i < count; ++i) acc.add(f.magnitude_at(i));
        return cell * acc.value();
    }
    for (std::size_t i = 0; i < count; ++i) acc.add(std::pow(f.magnitude_at(i), p));
    return std::pow(cell * acc.value(), 1.0 / p);
}

/// ||f||_2^2 via Parseval: (2pi)^n sum_k |c_k|^2.
inline double parseval_l2_sq(const Spectrum& s) {
    double vol = 1.0;
    for (int d = 0; d < s.grid().dim(); ++d) vol *= two_pi;
    CompensatedSum acc;
    for (const auto& z : s.raw()) acc.add(std::norm(z));
    return vol * acc.value();
}

/// ||grad f||_2^2 via Parseval: (2pi)^n sum_k |k|^2 |c_k|^2.
inline double gradient_l2_sq(const Spectrum& s) {
    double vol = 1.0;
    for (int d = 0; d < s.grid().dim(); ++d) vol *= two_pi;
    CompensatedSum acc;
    for (int c = 0; c < s.components(); ++c) {
        const auto span = s.component(c);
        for_each_mode(s.grid(), [&](std::size_t flat, const std::array<int, 3>& k) {
            acc.add(wavevector_norm_sq(k) * std::norm(span[flat]));
        });
    }
    return vol * acc.value();
}

/// Real L^2 pairing <a,b> = (2pi)^n sum_k Re(a_k conj(b_k)); equals the
/// integral of a.b for real fields.
inline double spectral_inner_product(const Spectrum& a, const Spectrum& b) {
    if (!(a.grid() == b.grid()) || a.components() != b.components())
        throw grid_mismatch("inner product requires congruent spectra");
    double vol = 1.0;
    for (int d = 0; d < a.grid().dim(); ++d) vol *= two_pi;
    CompensatedSum acc;
    for (std::size_t i = 0; i < a.raw().size(); ++i)
        acc.add((a.raw()[i] * std::conj(b.raw()[i])).real());
    return vol * acc.value();
}

}  // namespace lpns
