#include "leadlag/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "leadlag/errors.hpp"
#include "leadlag/rng.hpp"

namespace leadlag::sim {

void BachelierParams::validate() const {
    if (sigma1 <= 0.0 || sigma2 <= 0.0) fail("bad-params", "sigma1 and sigma2 must be positive");
    if (!(rho >= -1.0 && rho <= 1.0)) fail("bad-params", "rho must lie in [-1, 1]");
    if (T.ticks <= 0) fail("bad-params", "T must be positive");
    if (delta.ticks <= 0) fail("bad-params", "delta must be positive");
    if (theta.abs() >= delta) fail("bad-params", "|theta| must be smaller than delta");
    if (sim_mesh.ticks <= 0) fail("bad-params", "sim_mesh must be positive");
    if (span().ticks % sim_mesh.ticks != 0)
        fail("bad-params", "sim_mesh must divide T + delta");
    if (theta.ticks % sim_mesh.ticks != 0)
        fail("bad-params", "theta must be a multiple of sim_mesh");
    if (resolution <= 0) fail("bad-params", "resolution must be positive");
}

PathPair simulate_bachelier(const BachelierParams& params, std::uint64_t seed) {
    params.validate();
    const std::int64_t mesh = params.sim_mesh.ticks;
    const std::int64_t steps = params.span().ticks / mesh;   // observed lattice 0..steps
    const std::int64_t th = params.theta.ticks / mesh;       // lattice shift
    const std::int64_t lo = std::min<std::int64_t>(0, -th);  // simulated lattice lo..hi
    const std::int64_t hi = std::max(steps, steps - th);
    const std::size_t n = static_cast<std::size_t>(hi - lo) + 1;

    const double step_sd = std::sqrt(static_cast<double>(mesh) / params.resolution);
    CounterRng gen_b(stream_seed(seed, 0));
    CounterRng gen_w(stream_seed(seed, 1));

    std::vector<double> b(n), w(n);
    b[0] = 0.0;
    w[0] = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        b[k] = b[k - 1] + step_sd * gen_b.next_gaussian();
        w[k] = w[k - 1] + step_sd * gen_w.next_gaussian();
    }
    // Re-anchor so both motions vanish at t = 0.
    const std::size_t i0 = static_cast<std::size_t>(-lo);
    const double b0 = b[i0];
    const double w0 = w[i0];
    for (std::size_t k = 0; k < n; ++k) {
        b[k] -= b0;
        w[k] -= w0;
    }

    PathPair paths;
    paths.resolution = params.resolution;
    paths.mesh = params.sim_mesh;
    paths.grid_times.reserve(static_cast<std::size_t>(steps) + 1);
    paths.x_values.reserve(static_cast<std::size_t>(steps) + 1);
    paths.y_values.reserve(static_cast<std::size_t>(steps) + 1);
    const double cross = params.rho;
    const double ortho = std::sqrt(1.0 - params.rho * params.rho);
    for (std::int64_t i = 0; i <= steps; ++i) {
        const std::size_t ix = static_cast<std::size_t>(i - lo);
        const std::size_t iy = static_cast<std::size_t>(i - th - lo);
        paths.grid_times.push_back({i * mesh});
        paths.x_values.push_back(params.x0 + params.sigma1 * b[ix]);
        paths.y_values.push_back(params.y0 + params.sigma2 * (cross * b[iy] + ortho * w[iy]));
    }
    return paths;
}

namespace {

std::vector<std::size_t> draw_indices(const PathPair& paths, const SamplingScheme& scheme,
                                      std::uint64_t stream_key, const char* who) {
    const std::int64_t mesh = paths.mesh.ticks;
    const std::int64_t steps = static_cast<std::int64_t>(paths.size()) - 1;
    std::vector<std::size_t> idx;

    if (scheme.kind == SamplingScheme::Kind::Synchronous) {
        if (scheme.period.ticks <= 0 || scheme.period.ticks % mesh != 0)
            fail("bad-scheme",
                 std::string(who) + ": synchronous period must be a positive multiple of the "
                                    "simulation mesh");
        const std::int64_t step = scheme.period.ticks / mesh;
        if (step > steps) fail("bad-scheme", std::string(who) + ": period exceeds the span");
        for (std::int64_t i = 0; i <= steps; i += step) idx.push_back(static_cast<std::size_t>(i));
        return idx;
    }

    if (scheme.base_mesh.ticks <= 0 || scheme.base_mesh.ticks % mesh != 0)
        fail("bad-scheme",
             std::string(who) + ": base mesh must be a positive multiple of the simulation mesh");
    const std::int64_t stride = scheme.base_mesh.ticks / mesh;
    const std::int64_t last = steps / stride;  // candidate lattice 0..last (in strides)
    if (scheme.count < 2 || scheme.count > last)
        fail("bad-scheme", std::string(who) + ": uniform count " + std::to_string(scheme.count) +
                               " infeasible, admissible range [2, " + std::to_string(last) + "]");

    // Partial Fisher-Yates over the interior lattice; endpoints are forced.
    CounterRng gen(stream_key);
    std::vector<std::int64_t> pool(static_cast<std::size_t>(last - 1));
    std::iota(pool.begin(), pool.end(), 1);
    const std::size_t take = static_cast<std::size_t>(scheme.count - 2);
    for (std::size_t i = 0; i < take; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(gen.next_below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    std::vector<std::int64_t> chosen(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take));
    chosen.push_back(0);
    chosen.push_back(last);
    std::sort(chosen.begin(), chosen.end());
    idx.reserve(chosen.size());
    for (std::int64_t c : chosen) idx.push_back(static_cast<std::size_t>(c * stride));
    return idx;
}

TickSeries take(const PathPair& paths, const std::vector<std::size_t>& idx,
                const std::vector<double>& values, std::string label) {
    TickSeries out;
    out.label = std::move(label);
    out.resolution = paths.resolution;
    out.times.reserve(idx.size());
    out.prices.reserve(idx.size());
    for (std::size_t i : idx) {
        out.times.push_back(paths.grid_times[i]);
        out.prices.push_back(values[i]);
    }
    out.validate();
    return out;
}

}  // namespace

std::pair<TickSeries, TickSeries> sample(const PathPair& paths, const SamplingScheme& scheme_x,
                                         const SamplingScheme& scheme_y, std::uint64_t seed) {
    if (paths.size() < 2) fail("bad-scheme", "sample: path has fewer than 2 points");
    const auto ix = draw_indices(paths, scheme_x, stream_seed(seed, 0), "scheme_x");
    const auto iy = draw_indices(paths, scheme_y, stream_seed(seed, 1), "scheme_y");
    return {take(paths, ix, paths.x_values, "X"), take(paths, iy, paths.y_values, "Y")};
}

PathPair restrict_span(const PathPair& paths, TimeStamp end) {
    if (end.ticks <= 0 || end > paths.span_end())
        fail("bad-scheme", "restrict_span: window outside the simulated span");
    if (end.ticks % paths.mesh.ticks != 0)
        fail("bad-scheme", "restrict_span: window must be a multiple of the mesh");
    const std::size_t n = static_cast<std::size_t>(end.ticks / paths.mesh.ticks) + 1;
    PathPair out;
    out.resolution = paths.resolution;
    out.mesh = paths.mesh;
    out.grid_times.assign(paths.grid_times.begin(), paths.grid_times.begin() + static_cast<std::ptrdiff_t>(n));
    out.x_values.assign(paths.x_values.begin(), paths.x_values.begin() + static_cast<std::ptrdiff_t>(n));
    out.y_values.assign(paths.y_values.begin(), paths.y_values.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
}

double hat_function(double t) {
    const double a = std::fabs(t);
    return a <= 1.0 ? 1.0 - a : 0.0;
}

}  // namespace leadlag::sim
