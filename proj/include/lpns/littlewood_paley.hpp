#pragma once

#include <utility>
#include <vector>

#include "lpns/cutoff.hpp"
#include "lpns/field.hpp"
#include "lpns/grid.hpp"
#include "lpns/multipliers.hpp"
#include "lpns/parallel.hpp"

namespace lpns {

/// Indices j for which Delta_j is not identically zero on the grid.
///
/// j_min = -1: the smallest nonzero integer frequency is |k| = 1 and
/// block_symbol(-1, 1) > 0 while every j < -1 has (4/3) 2^{j+1} < 1.
/// j_max is the smallest j whose low-pass plateau swallows the whole grid,
/// i.e. sqrt(n) N/2 <= (3/4) 2^{j+1}; beyond it all block symbols vanish.
inline std::pair<int, int> active_block_range(const Grid& g) {
    const double k_max = std::sqrt(static_cast<double>(g.dim())) * g.nyquist();
    int j_max = -1;
    while (chi_plateau_radius * std::ldexp(1.0, j_max + 1) < k_max) ++j_max;
    return {-1, j_max};
}

/// Frequency projection to the annulus: multiplier phi_hat_j(k) c_k.
inline Spectrum dyadic_block(const Spectrum& s, int j,
                             CutoffKind kind = CutoffKind::smooth) {
    return apply_multiplier(s, [j, kind](const std::array<int, 3>& k) {
        return block_symbol(j, wavevector_norm(k), kind);
    });
}

/// Frequency projection to the ball: multiplier chi(|k| / 2^j) c_k.
inline Spectrum low_pass(const Spectrum& s, int j,
                         CutoffKind kind = CutoffKind::smooth) {
    return apply_multiplier(s, [j, kind](const std::array<int, 3>& k) {
        return low_pass_symbol(j, wavevector_norm(k), kind);
    });
}

/// The family {Delta_j f} over the active dyadic range. Summing all blocks
/// reconstructs the source minus its mean (telescoping partition of unity).
struct BlockDecomposition {
    int j_min;
    int j_max;
    std::vector<Spectrum> blocks;

    const Spectrum& block(int j) const { return blocks[static_cast<std::size_t>(j - j_min)]; }
};

inline BlockDecomposition decompose(const Spectrum& s,
                                    CutoffKind kind = CutoffKind::smooth) {
    const auto [j_min, j_max] = active_block_range(s.grid());
    BlockDecomposition out{j_min, j_max, {}};
    out.blocks.reserve(static_cast<std::size_t>(j_max - j_min + 1));
    for (int j = j_min; j <= j_max; ++j) out.blocks.emplace_back(s.grid(), s.components());
    parallel_for(out.blocks.size(), [&](std::size_t i) {
        out.blocks[i] = dyadic_block(s, j_min + static_cast<int>(i), kind);
    });
    return out;
}

}  // namespace lpns
