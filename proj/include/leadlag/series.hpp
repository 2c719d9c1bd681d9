#pragma once

#include <string>
#include <vector>

#include "leadlag/time.hpp"

namespace leadlag {

// One asset's observation times and prices. Times are strictly increasing
// exact ticks; at least two observations are required.
struct TickSeries {
    std::string label;
    std::int64_t resolution = kDefaultResolution;
    std::vector<TimeStamp> times;
    std::vector<double> prices;

    std::size_t size() const { return times.size(); }
    TimeStamp first_time() const { return times.front(); }
    TimeStamp last_time() const { return times.back(); }

    // Throws Error("bad-series", ...) if any invariant is violated.
    void validate() const;
};

// The observation intervals (s_i, s_{i+1}] of one series together with the
// price increment over each interval. Intervals are contiguous and disjoint.
struct IntervalFamily {
    std::vector<Interval> intervals;
    std::vector<double> increments;

    std::size_t size() const { return intervals.size(); }
    bool empty() const { return intervals.empty(); }
    TimeStamp span_start() const { return intervals.front().lo; }
    TimeStamp span_end() const { return intervals.back().hi; }
};

// Maps a tick series into its interval family.
IntervalFamily build_intervals(const TickSeries& series);

// Maximal interval length across both families (the sampling mesh).
TimeStamp mesh_delta(const IntervalFamily& x, const IntervalFamily& y);

}  // namespace leadlag
