#pragma once

#include "fig8/context.hpp"
#include "fig8/log_complex.hpp"
#include "fig8/sweep.hpp"

#include <vector>

namespace fig8 {

// 2 sin(2 pi / r) / sqrt(r)
Real eta_prime(int r);

enum class Window { near_one, near_half, bulk };
const char* window_name(Window w);

// Window of s = M / (N + 1/2): (1 - zeta, 1], (1/2 - delta, 1/2 + delta), or the rest.
Window classify_window(int M, int N, double zeta, double delta);

struct TvResult {
    int r = 0;
    LogComplex value;
    LogComplex near_one;
    LogComplex near_half;
    LogComplex bulk;
    Real growth_rate;  // (2 pi / r) log TV_r

    const LogComplex& window(Window w) const;
};

// TV_r = eta'_r^2 sum_{M=1}^{N} |J_M(exp(2 pi i / (N + 1/2)))|^2,  r = 2N + 1.
// Each |J_M|^2 is computed at max(ctx precision, min_jones_bits(M)); the
// reduction order is fixed, so the result does not depend on `workers`.
TvResult tv_invariant(int r, double zeta, double delta, const PrecisionContext& ctx, unsigned workers = 1);
inline TvResult tv_invariant(int r, const PrecisionContext& ctx, unsigned workers = 1) {
    return tv_invariant(r, 0.05, 0.05, ctx, workers);
}

// Rows (r; TV_r; growth_rate, growth_rate - Vol).
std::vector<SweepRow> tv_growth_table(const std::vector<int>& r_list, const PrecisionContext& ctx,
                                      unsigned workers = 1);

}  // namespace fig8
