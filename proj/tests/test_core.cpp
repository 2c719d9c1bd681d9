#include <doctest.h>

#include "leadlag/errors.hpp"
#include "leadlag/grid.hpp"
#include "leadlag/series.hpp"
#include "oracle.hpp"

using namespace leadlag;

TEST_CASE("overlaps: half-open boundary cases") {
    CHECK_FALSE(overlaps({ts(0), ts(2)}, {ts(2), ts(4)}));  // touching
    CHECK(overlaps({ts(0), ts(2)}, {ts(1), ts(4)}));
    CHECK(overlaps({ts(0), ts(10)}, {ts(3), ts(4)}));  // containment
    CHECK_FALSE(overlaps({ts(0), ts(2)}, {ts(5), ts(7)}));
}

TEST_CASE("overlaps agrees with point-membership on random pairs") {
    // Any nonempty intersection of integer-endpoint intervals contains a
    // half-integer point, so sampling t = k/2 decides membership exactly.
    CounterRng rng(101);
    for (int it = 0; it < 2000; ++it) {
        auto draw = [&] {
            const std::int64_t lo = static_cast<std::int64_t>(rng.next_below(41)) - 20;
            const std::int64_t len = 1 + static_cast<std::int64_t>(rng.next_below(10));
            return Interval{ts(lo), ts(lo + len)};
        };
        const Interval a = draw();
        const Interval b = draw();
        bool any_point = false;
        for (std::int64_t half = -44; half <= 66; ++half) {  // t = half / 2
            const bool in_a = 2 * a.lo.ticks < half && half <= 2 * a.hi.ticks;
            const bool in_b = 2 * b.lo.ticks < half && half <= 2 * b.hi.ticks;
            if (in_a && in_b) any_point = true;
        }
        CHECK(overlaps(a, b) == any_point);
    }
}

TEST_CASE("build_intervals: definition and errors") {
    TickSeries s;
    s.label = "t";
    s.times = {ts(0), ts(1), ts(3)};
    s.prices = {10.0, 12.0, 11.0};
    const IntervalFamily f = build_intervals(s);
    REQUIRE(f.size() == 2);
    CHECK(f.intervals[0] == Interval{ts(0), ts(1)});
    CHECK(f.intervals[1] == Interval{ts(1), ts(3)});
    CHECK(f.increments[0] == 2.0);
    CHECK(f.increments[1] == -1.0);

    TickSeries single;
    single.times = {ts(0)};
    single.prices = {1.0};
    CHECK_THROWS_AS(build_intervals(single), Error);

    TickSeries unsorted;
    unsorted.times = {ts(3), ts(1)};
    unsorted.prices = {1.0, 2.0};
    CHECK_THROWS_AS(build_intervals(unsorted), Error);
}

TEST_CASE("build_intervals: increments telescope") {
    CounterRng rng(77);
    for (int it = 0; it < 100; ++it) {
        const TickSeries s = testutil::random_series(rng, 60);
        const IntervalFamily f = build_intervals(s);
        double total = 0.0;
        for (double d : f.increments) total += d;
        CHECK(total == doctest::Approx(s.prices.back() - s.prices.front()).epsilon(1e-12));
        for (std::size_t k = 0; k + 1 < f.size(); ++k)
            CHECK(f.intervals[k].hi == f.intervals[k + 1].lo);
    }
}

TEST_CASE("mesh_delta: examples and exhaustive-scan oracle") {
    TickSeries a, b;
    a.times = {ts(0), ts(1), ts(3)};
    a.prices = {0, 0, 0};
    b.times = {ts(0), ts(3)};
    b.prices = {0, 0};
    CHECK(mesh_delta(build_intervals(a), build_intervals(b)) == ts(3));

    TickSeries e;
    e.times = {ts(0), ts(5), ts(10), ts(15)};
    e.prices = {0, 0, 0, 0};
    CHECK(mesh_delta(build_intervals(e), build_intervals(e)) == ts(5));

    CounterRng rng(5);
    for (int it = 0; it < 100; ++it) {
        const IntervalFamily x = build_intervals(testutil::random_series(rng, 50));
        const IntervalFamily y = build_intervals(testutil::random_series(rng, 50));
        std::int64_t longest = 0;
        for (const auto& iv : x.intervals) longest = std::max(longest, iv.length().ticks);
        for (const auto& iv : y.intervals) longest = std::max(longest, iv.length().ticks);
        CHECK(mesh_delta(x, y) == ts(longest));
    }
}

TEST_CASE("ShiftGrid: builders and bounds") {
    const ShiftGrid sym = ShiftGrid::symmetric(ts(10), ts(3));
    CHECK(sym.contains_zero);
    CHECK(sym.shifts.front() == ts(-9));
    CHECK(sym.shifts.back() == ts(9));
    CHECK(sym.size() == 7);

    const ShiftGrid reg = ShiftGrid::regular(ts(50), ts(150), ts(10), ts(1000));
    CHECK(reg.size() == 11);
    CHECK(reg.contains(ts(100)));
    CHECK_FALSE(reg.contains_zero);

    // Anchored at multiples of the mesh, not at grid-min.
    const ShiftGrid anchored = ShiftGrid::regular(ts(-5), ts(25), ts(10), ts(1000));
    REQUIRE(anchored.size() == 3);
    CHECK(anchored.shifts[0] == ts(0));
    CHECK(anchored.shifts[2] == ts(20));
    CHECK(anchored.contains_zero);

    CHECK_THROWS_AS(ShiftGrid::regular(ts(3), ts(4), ts(10), ts(100)), Error);   // empty
    CHECK_THROWS_AS(ShiftGrid::regular(ts(0), ts(100), ts(10), ts(50)), Error);  // outside delta
    CHECK_THROWS_AS(ShiftGrid::from_shifts({ts(3), ts(3)}, ts(10)), Error);
    CHECK_THROWS_AS(ShiftGrid::from_shifts({}, ts(10)), Error);
}
