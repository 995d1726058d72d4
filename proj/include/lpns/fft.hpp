#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include <fftw3.h>

#include "lpns/errors.hpp"
#include "lpns/field.hpp"
#include "lpns/grid.hpp"

namespace lpns {
namespace detail {

/// Process-wide cache of FFTW plans keyed by (dim, N, sign). Plans are created
/// once under a lock with FFTW_ESTIMATE (deterministic algorithm choice) and
/// executed concurrently via fftw_execute_dft, which is thread-safe.
class FftPlans {
  public:
    static fftw_plan get(int dim, int n, int sign) {
        static FftPlans instance;
        std::lock_guard<std::mutex> lock(instance.mutex_);
        const Key key{dim, n, sign};
        auto it = instance.plans_.find(key);
        if (it != instance.plans_.end()) return it->second.plan;

        Entry entry;
        std::size_t count = 1;
        for (int d = 0; d < dim; ++d) count *= static_cast<std::size_t>(n);
        entry.in.resize(count);
        entry.out.resize(count);
        int dims[3] = {n, n, n};
        entry.plan = fftw_plan_dft(dim, dims,
                                   reinterpret_cast<fftw_complex*>(entry.in.data()),
                                   reinterpret_cast<fftw_complex*>(entry.out.data()),
                                   sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!entry.plan) throw error("fftw plan creation failed");
        auto [pos, inserted] = instance.plans_.emplace(key, std::move(entry));
        return pos->second.plan;
    }

  private:
    using Key = std::tuple<int, int, int>;
    struct Entry {
        fftw_plan plan = nullptr;
        std::vector<std::complex<double>> in, out;  // keep plan buffers alive
    };

    FftPlans() = default;
    ~FftPlans() {
        for (auto& [key, entry] : plans_) fftw_destroy_plan(entry.plan);
    }

    std::mutex mutex_;
    std::map<Key, Entry> plans_;
};

inline void execute(int dim, int n, int sign, std::complex<double>* in,
                    std::complex<double>* out) {
    fftw_execute_dft(FftPlans::get(dim, n, sign),
                     reinterpret_cast<fftw_complex*>(in),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace detail

/// Coefficients c_k of f(x) = sum_k c_k exp(i k.x).
inline Spectrum forward_transform(const Field& f) {
    if (!f.all_finite()) throw invalid_input("field samples must be finite");
    const Grid& g = f.grid();
    const std::size_t count = g.point_count();
    Spectrum out(g, f.components());
    std::vector<std::complex<double>> in(count), work(count);
    const double scale = 1.0 / static_cast<double>(count);
    for (int c = 0; c < f.components(); ++c) {
        const auto src = f.component(c);
        for (std::size_t i = 0; i < count; ++i) in[i] = src[i];
        detail::execute(g.dim(), g.extent(), FFTW_FORWARD, in.data(), work.data());
        auto dst = out.component(c);
        for (std::size_t i = 0; i < count; ++i) dst[i] = scale * work[i];
    }
    return out;
}

inline constexpr double hermitian_tolerance = 1e-10;

/// Samples of the represented function. Requires Hermitian symmetry (real
/// output); the sub-1e-12 imaginary residue of the backward transform is
/// discarded.
inline Field inverse_transform(const Spectrum& s) {
    const double scale = s.max_abs();
    if (scale > 0.0 && s.hermitian_defect() > hermitian_tolerance * scale)
        throw symmetry_error("spectrum violates Hermitian symmetry");

    const Grid& g = s.grid();
    const std::size_t count = g.point_count();
    Field out(g, s.components());
    std::vector<std::complex<double>> in(count), work(count);
    for (int c = 0; c < s.components(); ++c) {
        const auto src = s.component(c);
        for (std::size_t i = 0; i < count; ++i) in[i] = src[i];
        detail::execute(g.dim(), g.extent(), FFTW_BACKWARD, in.data(), work.data());
        auto dst = out.component(c);
        for (std::size_t i = 0; i < count; ++i) dst[i] = work[i].real();
    }
    return out;
}

}  // namespace lpns
