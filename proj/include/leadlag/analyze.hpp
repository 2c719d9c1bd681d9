#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "leadlag/estimator.hpp"
#include "leadlag/simulate.hpp"

namespace leadlag::analyze {

struct McOptions {
    // Sample only [0, window] of the simulated span (the non-synchronous
    // experiments observe [0, T] although paths run to T + delta).
    // Default: the full span.
    std::optional<TimeStamp> window;
    // Contrast horizon; default min(params.T, both series ends).
    std::optional<TimeStamp> horizon;
};

struct McConfig {
    sim::BachelierParams params;
    sim::SamplingScheme scheme_x;
    sim::SamplingScheme scheme_y;
    ShiftGrid grid;
    int n_runs = 0;
    std::uint64_t master_seed = 0;
    McOptions options;
};

struct MonteCarloReport {
    std::map<std::int64_t, int> histogram;  // theta_hat ticks -> count
    int n_runs = 0;
    McConfig config;
    TimeStamp resolved_horizon;
};

// Repeats simulate -> sample -> estimate with per-run seeds derived from
// (master_seed, run index) and histograms the estimates.
MonteCarloReport montecarlo_table(const sim::BachelierParams& params,
                                  const sim::SamplingScheme& scheme_x,
                                  const sim::SamplingScheme& scheme_y, const ShiftGrid& grid,
                                  int n_runs, std::uint64_t master_seed,
                                  const McOptions& options = {});

// Default search grid for the simulation experiments: multiples of `mesh`
// spanning [theta - 50*mesh, theta + 50*mesh], clipped to (-delta, delta).
ShiftGrid table_grid(TimeStamp theta, TimeStamp mesh, TimeStamp delta);

// Closed-form vs empirical moments of the synchronous contrast evaluated at
// one shift near theta:
//   mean = sigma1*sigma2*T*rho*phi((shift-theta)/mesh)
//   var  = sigma1^2*sigma2^2*T*mesh*(1 + rho^2*phi^2)
// with phi the hat function, valid for |shift - theta| <= mesh. The
// adjacent fields estimate the covariance between consecutive per-increment
// contrast terms, which the same expansion predicts to vanish.
struct MomentCheck {
    TimeStamp shift;
    double empirical_mean = 0.0;
    double empirical_var = 0.0;
    double predicted_mean = 0.0;
    double predicted_var = 0.0;
    double adjacent_cov = 0.0;
    double adjacent_cov_se = 0.0;
    int n_sims = 0;
};

// Synchronous observations at the simulation mesh over [0, T + delta];
// `shift` must be a nonnegative lattice shift with |shift - theta| <= mesh.
MomentCheck prop1_moments(const sim::BachelierParams& params, TimeStamp shift, int n_sims,
                          std::uint64_t seed);

// Grid rule for rate_study: grid mesh = period / mesh_divisor, range
// [theta - half_range, theta + half_range].
struct GridMeshRule {
    std::int64_t mesh_divisor = 2;
    TimeStamp half_range{50'000};
};

struct RatePoint {
    TimeStamp period;
    double median_abs_error;  // in model-time units
};

// Median |theta_hat - theta| under synchronous sampling, one row per
// period. Used to check that the error shrinks with the sampling mesh.
std::vector<RatePoint> rate_study(const sim::BachelierParams& params,
                                  const std::vector<TimeStamp>& periods, const GridMeshRule& rule,
                                  int n_runs, std::uint64_t seed);

// Keeps ticks at indices 0, k, 2k, ...; k = 1 is the identity.
TickSeries subsample(const TickSeries& series, std::int64_t k);

struct SignaturePlot {
    std::vector<std::int64_t> ks;
    std::vector<double> realized_vols;
};

// Realized volatility (sum of squared increments) of the series subsampled
// at each k. Flat in k for a semimartingale price; decreasing signals
// microstructure noise.
SignaturePlot signature_plot(const TickSeries& series, const std::vector<std::int64_t>& ks);

}  // namespace leadlag::analyze
