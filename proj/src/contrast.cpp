#include "leadlag/contrast.hpp"

#include <string>

#include "leadlag/errors.hpp"

namespace leadlag {

namespace {

void check_family(const IntervalFamily& f, const char* name) {
    if (f.empty()) fail("bad-intervals", std::string(name) + ": empty interval family");
}

}  // namespace

double hy_contrast(const IntervalFamily& x, const IntervalFamily& y, TimeStamp shift,
                   TimeStamp horizon_T) {
    check_family(x, "hy_contrast(x)");
    check_family(y, "hy_contrast(y)");
    if (horizon_T > x.span_end() || horizon_T > y.span_end())
        fail("bad-horizon", "horizon " + std::to_string(horizon_T.ticks) +
                                " ticks exceeds a series span (x ends " +
                                std::to_string(x.span_end().ticks) + ", y ends " +
                                std::to_string(y.span_end().ticks) + ")");

    // I overlaps J - shift  <=>  I.lo + shift < J.hi  &&  J.lo < I.hi + shift.
    // The same predicate serves the negative branch (J overlaps I + shift);
    // only the horizon filter changes sides.
    const bool nonneg = shift.ticks >= 0;
    const std::size_t nx = x.size();
    const std::size_t ny = y.size();

    double sum = 0.0;
    std::size_t j0 = 0;
    for (std::size_t i = 0; i < nx; ++i) {
        const Interval xi = x.intervals[i];
        if (nonneg && xi.hi > horizon_T) break;  // intervals are time-ordered
        const TimeStamp lo = xi.lo + shift;
        const TimeStamp hi = xi.hi + shift;
        while (j0 < ny && y.intervals[j0].hi <= lo) ++j0;
        for (std::size_t j = j0; j < ny && y.intervals[j].lo < hi; ++j) {
            if (!nonneg && y.intervals[j].hi > horizon_T) break;
            sum += x.increments[i] * y.increments[j];
        }
    }
    return sum;
}

double synchronous_contrast(const TickSeries& x, const TickSeries& y, std::int64_t k) {
    x.validate();
    y.validate();
    if (x.resolution != y.resolution)
        fail("bad-series", "synchronous_contrast: resolutions differ");
    if (x.size() != y.size())
        fail("bad-series", "synchronous_contrast: series sizes differ");
    const TimeStamp period = x.times[1] - x.times[0];
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.times[i] != y.times[i])
            fail("bad-series", "synchronous_contrast: non-synchronous observation times");
        if (i > 0 && x.times[i] - x.times[i - 1] != period)
            fail("bad-series", "synchronous_contrast: observation times not equispaced");
    }

    const std::int64_t m = static_cast<std::int64_t>(x.size()) - 1;  // increment count
    double sum = 0.0;
    for (std::int64_t i = 0; i < m; ++i) {
        const std::int64_t j = i + k;
        if (j < 0 || j >= m) continue;
        sum += (x.prices[i + 1] - x.prices[i]) * (y.prices[j + 1] - y.prices[j]);
    }
    return sum;
}

}  // namespace leadlag
