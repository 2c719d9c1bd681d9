#include "leadlag/estimator.hpp"

#include <cmath>

#include "leadlag/errors.hpp"

namespace leadlag {

ContrastCurve contrast_curve(const IntervalFamily& x, const IntervalFamily& y,
                             const ShiftGrid& grid, TimeStamp horizon_T) {
    if (grid.shifts.empty()) fail("bad-grid", "contrast_curve: empty shift grid");
    ContrastCurve curve;
    curve.shifts = grid.shifts;
    curve.values.reserve(grid.size());
    for (TimeStamp s : grid.shifts) curve.values.push_back(hy_contrast(x, y, s, horizon_T));

    std::size_t best = 0;
    double best_abs = std::fabs(curve.values[0]);
    for (std::size_t i = 1; i < curve.values.size(); ++i) {
        const double a = std::fabs(curve.values[i]);
        if (a > best_abs) {  // strict: ties keep the smallest shift
            best = i;
            best_abs = a;
        }
    }
    curve.argmax_shift = curve.shifts[best];
    curve.argmax_abs_value = best_abs;
    return curve;
}

LeadLagEstimate estimate_leadlag(const TickSeries& x, const TickSeries& y, const ShiftGrid& grid,
                                 TimeStamp horizon_T) {
    if (grid.shifts.empty()) fail("bad-grid", "estimate_leadlag: empty shift grid");
    const IntervalFamily fx = build_intervals(x);
    const IntervalFamily fy = build_intervals(y);
    const ContrastCurve curve = contrast_curve(fx, fy, grid, horizon_T);

    LeadLagEstimate est;
    est.theta_hat = curve.argmax_shift;
    for (std::size_t i = 0; i < curve.shifts.size(); ++i)
        if (curve.shifts[i] == curve.argmax_shift) est.contrast_at_max = curve.values[i];
    est.mesh_delta_n = mesh_delta(fx, fy);
    est.grid_size = grid.size();
    return est;
}

TimeStamp default_horizon(const TickSeries& x, const TickSeries& y, const ShiftGrid& grid) {
    const TimeStamp last = x.last_time() < y.last_time() ? x.last_time() : y.last_time();
    TimeStamp h = last - grid.max_abs_shift();
    if (h.ticks < 1) h = ts(1);
    return h;
}

}  // namespace leadlag
