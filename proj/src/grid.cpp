#include "leadlag/grid.hpp"

#include <string>

#include "leadlag/errors.hpp"

namespace leadlag {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

void check_bounds(const std::vector<TimeStamp>& shifts, TimeStamp delta) {
    if (delta.ticks <= 0) fail("bad-grid", "delta must be positive");
    for (TimeStamp s : shifts) {
        if (s.abs() >= delta)
            fail("bad-grid", "shift " + std::to_string(s.ticks) +
                                 " ticks outside (-delta, delta) with delta " +
                                 std::to_string(delta.ticks));
    }
}

}  // namespace

TimeStamp ShiftGrid::max_abs_shift() const {
    TimeStamp lo = shifts.front().abs();
    TimeStamp hi = shifts.back().abs();
    return lo > hi ? lo : hi;
}

bool ShiftGrid::contains(TimeStamp s) const {
    for (TimeStamp g : shifts)
        if (g == s) return true;
    return false;
}

ShiftGrid ShiftGrid::symmetric(TimeStamp delta, TimeStamp mesh) {
    if (mesh.ticks <= 0) fail("bad-grid", "grid mesh must be positive");
    if (delta.ticks <= 0) fail("bad-grid", "delta must be positive");
    const std::int64_t kmax = (delta.ticks - 1) / mesh.ticks;
    ShiftGrid grid;
    grid.shifts.reserve(static_cast<std::size_t>(2 * kmax + 1));
    for (std::int64_t k = -kmax; k <= kmax; ++k) grid.shifts.push_back({k * mesh.ticks});
    grid.contains_zero = true;
    return grid;
}

ShiftGrid ShiftGrid::regular(TimeStamp lo, TimeStamp hi, TimeStamp mesh, TimeStamp delta) {
    if (mesh.ticks <= 0) fail("bad-grid", "grid mesh must be positive");
    const std::int64_t kmin = ceil_div(lo.ticks, mesh.ticks);
    const std::int64_t kmax = floor_div(hi.ticks, mesh.ticks);
    if (kmin > kmax)
        fail("bad-grid", "grid range [" + std::to_string(lo.ticks) + ", " +
                             std::to_string(hi.ticks) + "] contains no multiple of mesh " +
                             std::to_string(mesh.ticks));
    ShiftGrid grid;
    grid.shifts.reserve(static_cast<std::size_t>(kmax - kmin + 1));
    for (std::int64_t k = kmin; k <= kmax; ++k) grid.shifts.push_back({k * mesh.ticks});
    check_bounds(grid.shifts, delta);
    grid.contains_zero = kmin <= 0 && 0 <= kmax;
    return grid;
}

ShiftGrid ShiftGrid::from_shifts(std::vector<TimeStamp> shifts, TimeStamp delta) {
    if (shifts.empty()) fail("bad-grid", "empty shift grid");
    for (std::size_t i = 1; i < shifts.size(); ++i)
        if (shifts[i] <= shifts[i - 1]) fail("bad-grid", "shifts not strictly increasing");
    check_bounds(shifts, delta);
    ShiftGrid grid;
    grid.contains_zero = false;
    for (TimeStamp s : shifts)
        if (s.ticks == 0) grid.contains_zero = true;
    grid.shifts = std::move(shifts);
    return grid;
}

}  // namespace leadlag
