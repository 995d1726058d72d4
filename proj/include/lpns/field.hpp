#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "lpns/errors.hpp"
#include "lpns/grid.hpp"

namespace lpns {

/// Real-space samples of a scalar or vector function, component-major,
/// row-major over grid points within each component.
class Field {
  public:
    Field(Grid grid, int components)
        : grid_(grid),
          components_(components),
          samples_(static_cast<std::size_t>(components) * grid.point_count(), 0.0) {
        if (components < 1 || components > 3)
            throw invalid_input("field must have 1 to 3 components");
    }

    const Grid& grid() const { return grid_; }
    int components() const { return components_; }

    double at(int c, std::size_t i) const { return samples_[offset(c) + i]; }
    double& at(int c, std::size_t i) { return samples_[offset(c) + i]; }

    std::span<const double> component(int c) const {
        return {samples_.data() + offset(c), grid_.point_count()};
    }
    std::span<double> component(int c) {
        return {samples_.data() + offset(c), grid_.point_count()};
    }

    std::span<const double> raw() const { return samples_; }
    std::span<double> raw() { return samples_; }

    bool all_finite() const {
        for (double v : samples_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    /// Pointwise Euclidean magnitude across components.
    double magnitude_at(std::size_t i) const {
        if (components_ == 1) return std::abs(samples_[i]);
        double s = 0.0;
        for (int c = 0; c < components_; ++c) {
            const double v = samples_[offset(c) + i];
            s += v * v;
        }
        return std::sqrt(s);
    }

    Field& operator+=(const Field& other) {
        require_congruent(other);
        for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] += other.samples_[i];
        return *this;
    }

    Field& operator-=(const Field& other) {
        require_congruent(other);
        for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] -= other.samples_[i];
        return *this;
    }

    Field& operator*=(double a) {
        for (double& v : samples_) v *= a;
        return *this;
    }

    friend Field operator+(Field a, const Field& b) { return a += b; }
    friend Field operator-(Field a, const Field& b) { return a -= b; }
    friend Field operator*(double a, Field f) { return f *= a; }

  private:
    void require_congruent(const Field& other) const {
        if (!(grid_ == other.grid_) || components_ != other.components_)
            throw grid_mismatch("fields are not congruent");
    }

    std::size_t offset(int c) const {
        return static_cast<std::size_t>(c) * grid_.point_count();
    }

    Grid grid_;
    int components_;
    std::vector<double> samples_;
};

/// Fourier coefficients, same layout as Field. The represented function is
/// f(x) = sum_k c_k exp(i k.x).
class Spectrum {
  public:
    Spectrum(Grid grid, int components)
        : grid_(grid),
          components_(components),
          coeffs_(static_cast<std::size_t>(components) * grid.point_count(),
                  std::complex<double>(0.0, 0.0)) {
        if (components < 1 || components > 3)
            throw invalid_input("spectrum must have 1 to 3 components");
    }

    const Grid& grid() const { return grid_; }
    int components() const { return components_; }

    std::complex<double> coeff(int c, std::size_t i) const { return coeffs_[offset(c) + i]; }
    std::complex<double>& coeff(int c, std::size_t i) { return coeffs_[offset(c) + i]; }

    std::span<const std::complex<double>> component(int c) const {
        return {coeffs_.data() + offset(c), grid_.point_count()};
    }
    std::span<std::complex<double>> component(int c) {
        return {coeffs_.data() + offset(c), grid_.point_count()};
    }

    std::span<const std::complex<double>> raw() const { return coeffs_; }
    std::span<std::complex<double>> raw() { return coeffs_; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : coeffs_) m = std::max(m, std::abs(z));
        return m;
    }

    /// Largest deviation from c(-k) == conj(c(k)) over all modes and
    /// components. Zero for spectra of real fields.
    double hermitian_defect() const {
        double worst = 0.0;
        const int n = grid_.extent();
        for (int c = 0; c < components_; ++c) {
            for_each_mode(grid_, [&](std::size_t flat, const std::array<int, 3>& k) {
                std::array<int, 3> mneg{0, 0, 0};
                for (int d = 0; d < grid_.dim(); ++d)
                    mneg[d] = (n - grid_.storage_index(k[d])) % n;
                const auto mirrored = coeffs_[offset(c) + grid_.flat_index(mneg)];
                worst = std::max(worst,
                                 std::abs(mirrored - std::conj(coeffs_[offset(c) + flat])));
            });
        }
        return worst;
    }

    bool all_finite() const {
        for (const auto& z : coeffs_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    Spectrum& operator+=(const Spectrum& other) {
        require_congruent(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        return *this;
    }

    Spectrum& operator-=(const Spectrum& other) {
        require_congruent(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
        return *this;
    }

    Spectrum& operator*=(double a) {
        for (auto& z : coeffs_) z *= a;
        return *this;
    }

    /// this += a * other
    Spectrum& axpy(double a, const Spectrum& other) {
        require_congruent(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += a * other.coeffs_[i];
        return *this;
    }

    friend Spectrum operator+(Spectrum a, const Spectrum& b) { return a += b; }
    friend Spectrum operator-(Spectrum a, const Spectrum& b) { return a -= b; }
    friend Spectrum operator*(double a, Spectrum s) { return s *= a; }

  private:
    void require_congruent(const Spectrum& other) const {
        if (!(grid_ == other.grid_) || components_ != other.components_)
            throw grid_mismatch("spectra are not congruent");
    }

    std::size_t offset(int c) const {
        return static_cast<std::size_t>(c) * grid_.point_count();
    }

    Grid grid_;
    int components_;
    std::vector<std::complex<double>> coeffs_;
};

/// Extracts one component as a scalar spectrum.
inline Spectrum component_spectrum(const Spectrum& s, int c) {
    Spectrum out(s.grid(), 1);
    const auto src = s.component(c);
    auto dst = out.component(0);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i];
    return out;
}

inline double max_abs_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.raw().size(); ++i)
        m = std::max(m, std::abs(a.raw()[i] - b.raw()[i]));
    return m;
}

inline double max_abs_diff(const Spectrum& a, const Spectrum& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.raw().size(); ++i)
        m = std::max(m, std::abs(a.raw()[i] - b.raw()[i]));
    return m;
}

inline double max_abs(const Field& f) {
    double m = 0.0;
    for (double v : f.raw()) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace lpns
