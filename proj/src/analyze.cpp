#include "leadlag/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "leadlag/errors.hpp"
#include "leadlag/rng.hpp"

namespace leadlag::analyze {

namespace {

TimeStamp min3(TimeStamp a, TimeStamp b, TimeStamp c) {
    return std::min(a, std::min(b, c));
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

MonteCarloReport montecarlo_table(const sim::BachelierParams& params,
                                  const sim::SamplingScheme& scheme_x,
                                  const sim::SamplingScheme& scheme_y, const ShiftGrid& grid,
                                  int n_runs, std::uint64_t master_seed,
                                  const McOptions& options) {
    if (n_runs < 1) fail("bad-input", "montecarlo_table: n_runs must be >= 1");
    params.validate();
    if (grid.shifts.empty()) fail("bad-grid", "montecarlo_table: empty shift grid");

    MonteCarloReport report;
    report.n_runs = n_runs;
    report.config = {params, scheme_x, scheme_y, grid, n_runs, master_seed, options};

    for (int run = 0; run < n_runs; ++run) {
        const std::uint64_t run_key = stream_seed(master_seed, static_cast<std::uint64_t>(run));
        sim::PathPair paths = sim::simulate_bachelier(params, stream_seed(run_key, 0));
        if (options.window) paths = sim::restrict_span(paths, *options.window);
        auto [x, y] = sim::sample(paths, scheme_x, scheme_y, stream_seed(run_key, 1));
        const TimeStamp horizon =
            options.horizon ? *options.horizon : min3(params.T, x.last_time(), y.last_time());
        const LeadLagEstimate est = estimate_leadlag(x, y, grid, horizon);
        report.histogram[est.theta_hat.ticks] += 1;
        report.resolved_horizon = horizon;
    }
    return report;
}

ShiftGrid table_grid(TimeStamp theta, TimeStamp mesh, TimeStamp delta) {
    TimeStamp lo = theta - 50 * mesh;
    TimeStamp hi = theta + 50 * mesh;
    if (lo <= -delta) lo = -delta + ts(1);
    if (hi >= delta) hi = delta - ts(1);
    return ShiftGrid::regular(lo, hi, mesh, delta);
}

MomentCheck prop1_moments(const sim::BachelierParams& params, TimeStamp shift, int n_sims,
                          std::uint64_t seed) {
    params.validate();
    if (n_sims < 2) fail("bad-input", "prop1_moments: n_sims must be >= 2");
    const TimeStamp mesh = params.sim_mesh;
    if ((shift - params.theta).abs() > mesh)
        fail("bad-shift", "prop1_moments: |shift - theta| must be at most the sampling period");
    if (shift.ticks < 0 || shift.ticks % mesh.ticks != 0)
        fail("bad-shift", "prop1_moments: shift must be a nonnegative lattice point");
    if (params.T.ticks % mesh.ticks != 0)
        fail("bad-params", "prop1_moments: sim_mesh must divide T");

    const std::int64_t lag = shift.ticks / mesh.ticks;
    const std::int64_t m = params.T.ticks / mesh.ticks;  // increments up to T
    const double scale = static_cast<double>(params.resolution);
    const double mesh_units = static_cast<double>(mesh.ticks) / scale;
    const double t_units = static_cast<double>(params.T.ticks) / scale;
    const double phi =
        sim::hat_function(static_cast<double>((shift - params.theta).ticks) / mesh.ticks);
    const double s12 = params.sigma1 * params.sigma2;

    std::vector<double> contrasts(static_cast<std::size_t>(n_sims));
    std::vector<double> adj_means(static_cast<std::size_t>(n_sims));
    double term_sum = 0.0;
    std::int64_t term_count = 0;

    const auto scheme = sim::SamplingScheme::synchronous(mesh);
    for (int s = 0; s < n_sims; ++s) {
        const std::uint64_t run_key = stream_seed(seed, static_cast<std::uint64_t>(s));
        const sim::PathPair paths = sim::simulate_bachelier(params, run_key);
        auto [x, y] = sim::sample(paths, scheme, scheme, 0);
        contrasts[static_cast<std::size_t>(s)] =
            hy_contrast(build_intervals(x), build_intervals(y), shift, params.T);

        // Per-increment contrast terms X(I_i) * (shifted Y increment).
        std::vector<double> terms(static_cast<std::size_t>(m));
        for (std::int64_t i = 1; i <= m; ++i) {
            const std::size_t xi = static_cast<std::size_t>(i);
            const std::size_t yi = static_cast<std::size_t>(i + lag);
            terms[static_cast<std::size_t>(i - 1)] =
                (paths.x_values[xi] - paths.x_values[xi - 1]) *
                (paths.y_values[yi] - paths.y_values[yi - 1]);
        }
        double a = 0.0;
        for (std::int64_t i = 0; i + 1 < m; ++i)
            a += terms[static_cast<std::size_t>(i)] * terms[static_cast<std::size_t>(i + 1)];
        adj_means[static_cast<std::size_t>(s)] = a / static_cast<double>(m - 1);
        for (double t : terms) term_sum += t;
        term_count += m;
    }

    MomentCheck check;
    check.shift = shift;
    check.n_sims = n_sims;
    check.predicted_mean = s12 * t_units * params.rho * phi;
    check.predicted_var =
        s12 * s12 * t_units * mesh_units * (1.0 + params.rho * params.rho * phi * phi);

    double mean = 0.0;
    for (double u : contrasts) mean += u;
    mean /= n_sims;
    double var = 0.0;
    for (double u : contrasts) var += (u - mean) * (u - mean);
    var /= n_sims - 1;
    check.empirical_mean = mean;
    check.empirical_var = var;

    const double term_mean = term_sum / static_cast<double>(term_count);
    double adj_mean = 0.0;
    for (double a : adj_means) adj_mean += a;
    adj_mean /= n_sims;
    double adj_var = 0.0;
    for (double a : adj_means) adj_var += (a - adj_mean) * (a - adj_mean);
    adj_var /= n_sims - 1;
    check.adjacent_cov = adj_mean - term_mean * term_mean;
    check.adjacent_cov_se = std::sqrt(adj_var / n_sims);
    return check;
}

std::vector<RatePoint> rate_study(const sim::BachelierParams& params,
                                  const std::vector<TimeStamp>& periods, const GridMeshRule& rule,
                                  int n_runs, std::uint64_t seed) {
    if (periods.empty()) fail("bad-input", "rate_study: no periods given");
    if (n_runs < 1) fail("bad-input", "rate_study: n_runs must be >= 1");
    if (rule.mesh_divisor < 1) fail("bad-input", "rate_study: mesh_divisor must be >= 1");
    params.validate();

    std::vector<RatePoint> out;
    out.reserve(periods.size());
    for (std::size_t pi = 0; pi < periods.size(); ++pi) {
        const TimeStamp period = periods[pi];
        if (period.ticks <= 0 || period.ticks % params.sim_mesh.ticks != 0)
            fail("bad-input", "rate_study: period must be a positive multiple of sim_mesh");
        const TimeStamp grid_mesh = ts(period.ticks / rule.mesh_divisor);
        if (grid_mesh.ticks <= 0) fail("bad-input", "rate_study: grid mesh underflow");
        const ShiftGrid grid = ShiftGrid::regular(params.theta - rule.half_range,
                                                  params.theta + rule.half_range, grid_mesh,
                                                  params.delta);
        const auto scheme = sim::SamplingScheme::synchronous(period);
        const std::uint64_t period_key = stream_seed(seed, pi);

        std::vector<double> errors(static_cast<std::size_t>(n_runs));
        for (int run = 0; run < n_runs; ++run) {
            const std::uint64_t run_key = stream_seed(period_key, static_cast<std::uint64_t>(run));
            const sim::PathPair paths = sim::simulate_bachelier(params, stream_seed(run_key, 0));
            auto [x, y] = sim::sample(paths, scheme, scheme, stream_seed(run_key, 1));
            const LeadLagEstimate est = estimate_leadlag(x, y, grid, params.T);
            errors[static_cast<std::size_t>(run)] =
                (est.theta_hat - params.theta).abs().units(params.resolution);
        }
        out.push_back({period, median(std::move(errors))});
    }
    return out;
}

TickSeries subsample(const TickSeries& series, std::int64_t k) {
    series.validate();
    if (k < 1) fail("bad-input", "subsample: k must be >= 1");
    if (k == 1) return series;
    TickSeries out;
    out.label = series.label;
    out.resolution = series.resolution;
    for (std::size_t i = 0; i < series.size(); i += static_cast<std::size_t>(k)) {
        out.times.push_back(series.times[i]);
        out.prices.push_back(series.prices[i]);
    }
    if (out.times.size() < 2)
        fail("bad-input", "subsample: k = " + std::to_string(k) + " leaves fewer than 2 ticks");
    return out;
}

SignaturePlot signature_plot(const TickSeries& series, const std::vector<std::int64_t>& ks) {
    series.validate();
    if (ks.empty()) fail("bad-input", "signature_plot: no subsampling factors given");
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < 1) fail("bad-input", "signature_plot: factors must be >= 1");
        if (i > 0 && ks[i] <= ks[i - 1])
            fail("bad-input", "signature_plot: factors must be strictly increasing");
    }
    SignaturePlot plot;
    plot.ks = ks;
    plot.realized_vols.reserve(ks.size());
    for (std::int64_t k : ks) {
        const TickSeries sub = subsample(series, k);
        double rv = 0.0;
        for (std::size_t i = 1; i < sub.size(); ++i) {
            const double d = sub.prices[i] - sub.prices[i - 1];
            rv += d * d;
        }
        plot.realized_vols.push_back(rv);
    }
    return plot;
}

}  // namespace leadlag::analyze
