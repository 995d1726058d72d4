#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "lpns/errors.hpp"

namespace lpns {

inline constexpr double two_pi = 6.28318530717958647692528676655900577;

/// Uniform periodic grid on [0,2pi)^dim with N points per axis.
///
/// The wavenumber set per axis is {-N/2+1, ..., N/2}: FFT storage index m
/// maps to k = m for m <= N/2 and k = m - N above.
class Grid {
  public:
    Grid(int dim, int points_per_axis) : dim_(dim), n_(points_per_axis) {
        if (dim < 1 || dim > 3)
            throw invalid_input("grid dimension must be 1, 2 or 3");
        if (n_ < 8 || (n_ & (n_ - 1)) != 0)
            throw invalid_input("points per axis must be a power of two >= 8");
    }

    int dim() const { return dim_; }
    int extent() const { return n_; }
    int nyquist() const { return n_ / 2; }
    double spacing() const { return two_pi / n_; }

    std::size_t point_count() const {
        std::size_t p = 1;
        for (int d = 0; d < dim_; ++d) p *= static_cast<std::size_t>(n_);
        return p;
    }

    /// Signed wavenumber of storage index m along one axis.
    int wavenumber(int m) const { return m <= n_ / 2 ? m : m - n_; }

    /// Storage index of signed wavenumber k along one axis.
    int storage_index(int k) const { return k >= 0 ? k : k + n_; }

    /// Flat row-major index of a per-axis storage-index tuple.
    std::size_t flat_index(const std::array<int, 3>& m) const {
        std::size_t idx = 0;
        for (int d = 0; d < dim_; ++d)
            idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(m[d]);
        return idx;
    }

    bool operator==(const Grid&) const = default;

  private:
    int dim_;
    int n_;
};

/// Calls fn(flat_index, k) for every grid mode in row-major storage order,
/// where k is the signed wavevector (unused trailing axes are zero).
template <typename Fn>
void for_each_mode(const Grid& g, Fn&& fn) {
    const int n = g.extent();
    std::array<int, 3> k{0, 0, 0};
    std::size_t flat = 0;
    if (g.dim() == 1) {
        for (int m0 = 0; m0 < n; ++m0) {
            k[0] = g.wavenumber(m0);
            fn(flat++, k);
        }
    } else if (g.dim() == 2) {
        for (int m0 = 0; m0 < n; ++m0) {
            k[0] = g.wavenumber(m0);
            for (int m1 = 0; m1 < n; ++m1) {
                k[1] = g.wavenumber(m1);
                fn(flat++, k);
            }
        }
    } else {
        for (int m0 = 0; m0 < n; ++m0) {
            k[0] = g.wavenumber(m0);
            for (int m1 = 0; m1 < n; ++m1) {
                k[1] = g.wavenumber(m1);
                for (int m2 = 0; m2 < n; ++m2) {
                    k[2] = g.wavenumber(m2);
                    fn(flat++, k);
                }
            }
        }
    }
}

inline double wavevector_norm(const std::array<int, 3>& k) {
    return std::sqrt(static_cast<double>(k[0]) * k[0] +
                     static_cast<double>(k[1]) * k[1] +
                     static_cast<double>(k[2]) * k[2]);
}

inline double wavevector_norm_sq(const std::array<int, 3>& k) {
    return static_cast<double>(k[0]) * k[0] + static_cast<double>(k[1]) * k[1] +
           static_cast<double>(k[2]) * k[2];
}

}  // namespace lpns
