#pragma once

#include <vector>

#include "leadlag/time.hpp"

namespace leadlag {

// Finite set of candidate shifts, strictly increasing, every shift strictly
// inside (-delta, delta) for the delta it was built with.
struct ShiftGrid {
    std::vector<TimeStamp> shifts;
    bool contains_zero = false;

    std::size_t size() const { return shifts.size(); }
    TimeStamp min_shift() const { return shifts.front(); }
    TimeStamp max_shift() const { return shifts.back(); }
    TimeStamp max_abs_shift() const;
    bool contains(TimeStamp s) const;

    // All multiples of `mesh` strictly inside (-delta, delta). Always
    // contains zero; this is the default builder.
    static ShiftGrid symmetric(TimeStamp delta, TimeStamp mesh);

    // Multiples of `mesh` within [lo, hi], anchored at zero. Errors if the
    // range is empty or any point falls outside (-delta, delta).
    static ShiftGrid regular(TimeStamp lo, TimeStamp hi, TimeStamp mesh, TimeStamp delta);

    // Explicit shift list (must be strictly increasing, inside (-delta, delta)).
    static ShiftGrid from_shifts(std::vector<TimeStamp> shifts, TimeStamp delta);
};

}  // namespace leadlag
