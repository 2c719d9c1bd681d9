#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "leadlag/series.hpp"

namespace leadlag::sim {

// Correlated arithmetic Brownian pair with a time shift on the second
// asset:
//   X_t = x0 + sigma1 * B_t
//   Y_t = y0 + sigma2 * (rho * B_{t-theta} + sqrt(1-rho^2) * W_{t-theta})
// with B, W independent standard Brownian motions. Positive theta means X
// leads Y.
struct BachelierParams {
    double x0 = 0.0;
    double y0 = 0.0;
    double sigma1 = 1.0;
    double sigma2 = 1.0;
    double rho = 0.0;
    TimeStamp theta;                           // lead-lag, |theta| < delta
    TimeStamp T{kDefaultResolution};           // estimation horizon
    TimeStamp delta{kDefaultResolution};       // max admissible |shift|
    TimeStamp sim_mesh{kDefaultResolution / 1000};  // path discretization step
    std::int64_t resolution = kDefaultResolution;

    TimeStamp span() const { return T + delta; }  // observation window [0, span]
    void validate() const;
};

// Discretized pair on the simulation mesh over [0, T + delta].
struct PathPair {
    std::vector<TimeStamp> grid_times;
    std::vector<double> x_values;
    std::vector<double> y_values;
    std::int64_t resolution = kDefaultResolution;
    TimeStamp mesh;

    std::size_t size() const { return grid_times.size(); }
    TimeStamp span_end() const { return grid_times.back(); }
};

// How observation times are drawn from a path.
struct SamplingScheme {
    enum class Kind { Synchronous, UniformRandom };
    Kind kind = Kind::Synchronous;
    TimeStamp period;     // Synchronous: spacing (multiple of the path mesh)
    std::int64_t count = 0;  // UniformRandom: number of ticks
    TimeStamp base_mesh;  // UniformRandom: candidate-point spacing

    static SamplingScheme synchronous(TimeStamp period) {
        return {Kind::Synchronous, period, 0, {}};
    }
    static SamplingScheme uniform_random(std::int64_t count, TimeStamp base_mesh) {
        return {Kind::UniformRandom, {}, count, base_mesh};
    }
};

// Generates the path pair from i.i.d. Gaussian increments; pure function of
// (params, seed). Both Brownian motions are simulated once on the union
// window [min(0,-theta), span + max(0,-theta)] so Y is defined everywhere
// it is observed.
PathPair simulate_bachelier(const BachelierParams& params, std::uint64_t seed);

// Draws observation times for X and Y from independent sub-streams of
// `seed` and reads prices off the path. Synchronous takes every period-th
// mesh point from 0; UniformRandom draws `count` distinct base-mesh points
// without replacement, first and last span points always included.
std::pair<TickSeries, TickSeries> sample(const PathPair& paths, const SamplingScheme& scheme_x,
                                         const SamplingScheme& scheme_y, std::uint64_t seed);

// Path restricted to [0, end] (end a multiple of the mesh); for sampling a
// sub-window of the simulated span.
PathPair restrict_span(const PathPair& paths, TimeStamp end);

// Hat function (1 - |t|) * 1{|t| <= 1}: the shape of the contrast mean as a
// function of the shift, in mesh units, around the true lead-lag.
double hat_function(double t);

}  // namespace leadlag::sim
