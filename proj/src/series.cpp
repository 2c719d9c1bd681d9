#include "leadlag/series.hpp"

#include <cmath>

#include "leadlag/errors.hpp"

namespace leadlag {

void TickSeries::validate() const {
    if (times.size() != prices.size())
        fail("bad-series", "series '" + label + "': times and prices differ in length");
    if (times.size() < 2)
        fail("bad-series", "series '" + label + "': needs at least 2 ticks, got " +
                               std::to_string(times.size()));
    if (resolution <= 0)
        fail("bad-series", "series '" + label + "': non-positive resolution");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (times[i] <= times[i - 1])
            fail("bad-series", "series '" + label + "': times not strictly increasing at index " +
                                   std::to_string(i));
    }
    for (std::size_t i = 0; i < prices.size(); ++i) {
        if (!std::isfinite(prices[i]))
            fail("bad-series",
                 "series '" + label + "': non-finite price at index " + std::to_string(i));
    }
}

IntervalFamily build_intervals(const TickSeries& series) {
    series.validate();
    IntervalFamily family;
    const std::size_t n = series.size();
    family.intervals.reserve(n - 1);
    family.increments.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        family.intervals.push_back({series.times[i], series.times[i + 1]});
        family.increments.push_back(series.prices[i + 1] - series.prices[i]);
    }
    return family;
}

TimeStamp mesh_delta(const IntervalFamily& x, const IntervalFamily& y) {
    if (x.empty() || y.empty()) fail("bad-intervals", "mesh_delta: empty interval family");
    TimeStamp best{0};
    for (const Interval& iv : x.intervals)
        if (iv.length() > best) best = iv.length();
    for (const Interval& iv : y.intervals)
        if (iv.length() > best) best = iv.length();
    return best;
}

}  // namespace leadlag
