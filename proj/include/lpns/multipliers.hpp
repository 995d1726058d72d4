#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "lpns/field.hpp"
#include "lpns/grid.hpp"

namespace lpns {

/// Applies a scalar Fourier multiplier componentwise: out_k = m(k) c_k.
/// Zero coefficients stay zero without evaluating the symbol, so symbols
/// singular at k = 0 are fine on mean-zero input.
template <typename SymbolFn>
Spectrum apply_multiplier(const Spectrum& s, SymbolFn&& m) {
    Spectrum out(s.grid(), s.components());
    for (int c = 0; c < s.components(); ++c) {
        const auto src = s.component(c);
        auto dst = out.component(c);
        for_each_mode(s.grid(), [&](std::size_t flat, const std::array<int, 3>& k) {
            const std::complex<double> v = src[flat];
            if (v == std::complex<double>(0.0, 0.0)) return;
            const std::complex<double> w = std::complex<double>(m(k)) * v;
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                throw invalid_input("multiplier symbol non-finite on occupied mode");
            dst[flat] = w;
        });
    }
    return out;
}

/// Lambda^alpha = (-Laplacian)^{alpha/2}, symbol |k|^alpha; k = 0 stays zero.
inline Spectrum fractional_laplacian(const Spectrum& s, double alpha) {
    return apply_multiplier(s, [alpha](const std::array<int, 3>& k) {
        const double r = wavevector_norm(k);
        return r == 0.0 ? 0.0 : std::pow(r, alpha);
    });
}

/// Gradient of a scalar: component a carries i k_a c_k. The Nyquist plane of
/// each differentiated axis is zeroed; i*k there has no real-field
/// representation.
inline Spectrum gradient(const Spectrum& scalar) {
    if (scalar.components() != 1)
        throw invalid_input("gradient expects a scalar spectrum");
    const Grid& g = scalar.grid();
    Spectrum out(g, g.dim());
    const auto src = scalar.component(0);
    for (int a = 0; a < g.dim(); ++a) {
        auto dst = out.component(a);
        for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& k) {
            if (k[a] == g.nyquist()) return;
            dst[flat] = std::complex<double>(0.0, static_cast<double>(k[a])) * src[flat];
        });
    }
    return out;
}

/// Leray projection onto divergence-free fields: c - k (k.c)/|k|^2.
inline Spectrum leray_project(const Spectrum& vec) {
    const Grid& g = vec.grid();
    if (vec.components() != g.dim())
        throw invalid_input("Leray projection expects a dim-component spectrum");
    Spectrum out = vec;
    for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& k) {
        const double ksq = wavevector_norm_sq(k);
        if (ksq == 0.0) return;
        std::complex<double> kdotc(0.0, 0.0);
        for (int a = 0; a < g.dim(); ++a)
            kdotc += static_cast<double>(k[a]) * vec.coeff(a, flat);
        for (int a = 0; a < g.dim(); ++a)
            out.coeff(a, flat) -= static_cast<double>(k[a]) * kdotc / ksq;
    });
    return out;
}

/// Vorticity of a velocity spectrum: scalar i(k1 u2 - k2 u1) in 2D,
/// i k x u in 3D.
inline Spectrum curl(const Spectrum& vec) {
    const Grid& g = vec.grid();
    if (vec.components() != g.dim() || g.dim() < 2)
        throw invalid_input("curl expects a 2- or 3-component vector spectrum");
    const std::complex<double> im(0.0, 1.0);
    if (g.dim() == 2) {
        Spectrum out(g, 1);
        for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& k) {
            out.coeff(0, flat) = im * (static_cast<double>(k[0]) * vec.coeff(1, flat) -
                                       static_cast<double>(k[1]) * vec.coeff(0, flat));
        });
        return out;
    }
    Spectrum out(g, 3);
    for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& k) {
        const auto u0 = vec.coeff(0, flat);
        const auto u1 = vec.coeff(1, flat);
        const auto u2 = vec.coeff(2, flat);
        out.coeff(0, flat) = im * (static_cast<double>(k[1]) * u2 - static_cast<double>(k[2]) * u1);
        out.coeff(1, flat) = im * (static_cast<double>(k[2]) * u0 - static_cast<double>(k[0]) * u2);
        out.coeff(2, flat) = im * (static_cast<double>(k[0]) * u1 - static_cast<double>(k[1]) * u0);
    });
    return out;
}

/// max_k |k.c(k)|, the symbol-level divergence residual.
inline double divergence_defect(const Spectrum& vec) {
    const Grid& g = vec.grid();
    if (vec.components() != g.dim())
        throw invalid_input("divergence expects a dim-component spectrum");
    double worst = 0.0;
    for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& k) {
        std::complex<double> kdotc(0.0, 0.0);
        for (int a = 0; a < g.dim(); ++a)
            kdotc += static_cast<double>(k[a]) * vec.coeff(a, flat);
        worst = std::max(worst, std::abs(kdotc));
    });
    return worst;
}

}  // namespace lpns
