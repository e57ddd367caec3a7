#include "fig8/turaev_viro.hpp"

#include "fig8/errors.hpp"
#include "fig8/jones.hpp"
#include "fig8/special_functions.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace fig8 {

const Real& SweepRow::column(const std::string& name) const {
    for (const auto& c : columns)
        if (c.first == name) return c.second;
    throw DomainError("SweepRow: no column " + name);
}

Real eta_prime(int r) {
    if (r < 3 || r % 2 == 0) throw DomainError("eta_prime: r must be odd and >= 3");
    Real rr(static_cast<long>(r));
    return 2L * sin(2L * pi() / rr) / sqrt(rr);
}

const char* window_name(Window w) {
    switch (w) {
    case Window::near_one: return "near_one";
    case Window::near_half: return "near_half";
    case Window::bulk: return "bulk";
    }
    return "bulk";
}

Window classify_window(int M, int N, double zeta, double delta) {
    Real s = Real(static_cast<long>(M)) / (Real(static_cast<long>(N)) + 0.5);
    if (s > 1L - Real(zeta) && s <= 1L) return Window::near_one;
    if (abs(s - 0.5) < Real(delta)) return Window::near_half;
    return Window::bulk;
}

const LogComplex& TvResult::window(Window w) const {
    switch (w) {
    case Window::near_one: return near_one;
    case Window::near_half: return near_half;
    case Window::bulk: return bulk;
    }
    return bulk;
}

namespace {

LogComplex jones_norm_sq(int M, int N, const PrecisionContext& ctx) {
    PrecisionContext local = ctx.at_least(min_jones_bits(M));
    PrecisionScope scope(local.precision_bits);
    JonesValue j = colored_jones_exact(RootSpec::from_MN(M, N), local);
    return LogComplex::from_real(norm(j.value));
}

}  // namespace

TvResult tv_invariant(int r, double zeta, double delta, const PrecisionContext& ctx, unsigned workers) {
    if (r < 5 || r % 2 == 0) throw DomainError("tv_invariant: r must be odd and >= 5");
    if (!(zeta > 0.0 && zeta < 0.5)) throw DomainError("tv_invariant: zeta must lie in (0, 1/2)");
    if (!(delta > 0.0 && delta < 0.25)) throw DomainError("tv_invariant: delta must lie in (0, 1/4)");
    ctx.validate();
    const int N = (r - 1) / 2;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(N)));

    std::vector<LogComplex> terms(N);
    std::atomic<int> next{1};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
        try {
            // Largest M first keeps the tail of the queue cheap.
            for (int i = next++; i <= N; i = next++) {
                int M = N + 1 - i;
                terms[M - 1] = jones_norm_sq(M, N, ctx);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
            next = N + 1;
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    PrecisionScope scope(ctx.precision_bits);
    std::vector<LogComplex> parts[3];
    for (int M = 1; M <= N; ++M) parts[static_cast<int>(classify_window(M, N, zeta, delta))].push_back(terms[M - 1]);

    Real eta = eta_prime(r);
    LogComplex pref = LogComplex::from_real(eta * eta);
    TvResult out;
    out.r = r;
    out.value = pref * pairwise_sum(terms);
    out.near_one = pref * pairwise_sum(parts[0]);
    out.near_half = pref * pairwise_sum(parts[1]);
    out.bulk = pref * pairwise_sum(parts[2]);
    out.growth_rate = 2L * pi() / Real(static_cast<long>(r)) * out.value.log_mag;
    return out;
}

std::vector<SweepRow> tv_growth_table(const std::vector<int>& r_list, const PrecisionContext& ctx, unsigned workers) {
    std::vector<SweepRow> rows;
    PrecisionScope scope(ctx.precision_bits);
    Real vol = figure_eight_volume();
    for (int r : r_list) {
        TvResult tv = tv_invariant(r, ctx, workers);
        SweepRow row;
        row.params = {{"r", static_cast<double>(r)}};
        row.exact = tv.value;
        row.columns = {{"growth_rate", tv.growth_rate}, {"deviation", tv.growth_rate - vol}};
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace fig8
