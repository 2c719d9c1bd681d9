#pragma once

#include "leadlag/contrast.hpp"
#include "leadlag/grid.hpp"

namespace leadlag {

// Contrast values over a shift grid plus the maximizer of |U|. Among equal
// maxima (exact float equality) the smallest shift wins.
struct ContrastCurve {
    std::vector<TimeStamp> shifts;
    std::vector<double> values;
    TimeStamp argmax_shift;
    double argmax_abs_value = 0.0;
};

struct LeadLagEstimate {
    TimeStamp theta_hat;
    double contrast_at_max = 0.0;  // signed U at theta_hat
    TimeStamp mesh_delta_n;
    std::size_t grid_size = 0;
};

// Evaluates hy_contrast at every grid shift. Evaluations at distinct shifts
// are pure functions of shared read-only inputs; the loop may be
// parallelized as long as results are merged in grid order.
ContrastCurve contrast_curve(const IntervalFamily& x, const IntervalFamily& y,
                             const ShiftGrid& grid, TimeStamp horizon_T);

// Lead-lag estimate: the smallest maximizer of |U| over the grid.
LeadLagEstimate estimate_leadlag(const TickSeries& x, const TickSeries& y, const ShiftGrid& grid,
                                 TimeStamp horizon_T);

// Default horizon when the caller has no better choice: the earlier of the
// two series ends minus the largest admissible |shift|, clamped to one tick.
TimeStamp default_horizon(const TickSeries& x, const TickSeries& y, const ShiftGrid& grid);

}  // namespace leadlag
