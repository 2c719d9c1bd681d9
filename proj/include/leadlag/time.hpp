#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>

namespace leadlag {

// Ticks per model-time unit. One tick is 10^-6 units unless a data set
// declares otherwise (e.g. nanosecond files use 10^9).
inline constexpr std::int64_t kDefaultResolution = 1'000'000;

// Exact integer time. Used both for instants and for durations/shifts, so
// that shifting and comparing interval endpoints is exactly decidable.
struct TimeStamp {
    std::int64_t ticks = 0;

    friend constexpr auto operator<=>(TimeStamp, TimeStamp) = default;

    friend constexpr TimeStamp operator+(TimeStamp a, TimeStamp b) { return {a.ticks + b.ticks}; }
    friend constexpr TimeStamp operator-(TimeStamp a, TimeStamp b) { return {a.ticks - b.ticks}; }
    constexpr TimeStamp operator-() const { return {-ticks}; }
    friend constexpr TimeStamp operator*(std::int64_t k, TimeStamp t) { return {k * t.ticks}; }

    constexpr TimeStamp abs() const { return {ticks < 0 ? -ticks : ticks}; }

    // Value in model-time units at the given resolution.
    constexpr double units(std::int64_t resolution = kDefaultResolution) const {
        return static_cast<double>(ticks) / static_cast<double>(resolution);
    }
};

constexpr TimeStamp ts(std::int64_t ticks) { return TimeStamp{ticks}; }

// Half-open interval (lo, hi], the shape of Hayashi-Yoshida observation
// intervals. Touching intervals do not overlap.
struct Interval {
    TimeStamp lo;
    TimeStamp hi;

    constexpr TimeStamp length() const { return hi - lo; }
    constexpr Interval shifted(TimeStamp s) const { return {lo + s, hi + s}; }

    friend constexpr bool operator==(Interval, Interval) = default;
};

// Nonempty intersection of two half-open intervals.
constexpr bool overlaps(Interval a, Interval b) {
    const TimeStamp lo = a.lo > b.lo ? a.lo : b.lo;
    const TimeStamp hi = a.hi < b.hi ? a.hi : b.hi;
    return lo < hi;
}

}  // namespace leadlag
