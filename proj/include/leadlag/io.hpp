#pragma once

#include <cstdint>
#include <string>

#include "leadlag/series.hpp"

namespace leadlag::io {

enum class TimeUnit { Seconds, Milliseconds, Microseconds, Nanoseconds };

TimeUnit parse_time_unit(const std::string& name);
std::string time_unit_name(TimeUnit unit);

// Internal tick resolution for a file unit: 10^6 ticks per second, bumped
// to 10^9 for nanosecond files so the conversion stays lossless.
std::int64_t unit_resolution(TimeUnit unit);
// Ticks per one file-unit at that resolution.
std::int64_t unit_scale(TimeUnit unit);

// How to read a delimited tick file. Columns may be named (requires a
// header) or zero-based indices rendered as "#0", "#1".
struct TickFileSpec {
    std::string path;
    std::string time_column = "time";
    std::string price_column = "price";
    TimeUnit time_unit = TimeUnit::Seconds;
    char delimiter = ',';
    bool header = true;
};

// Reads a tick file into a validated series. Lines starting with '#' and
// blank lines are skipped; errors carry the offending physical line number.
TickSeries ingest(const TickFileSpec& spec);

// Exact decimal <-> integer tick conversions. `scale` is a power of ten;
// parse fails on more fractional digits than the scale can hold and on
// int64 overflow.
std::int64_t parse_time_decimal(const std::string& text, std::int64_t scale);
std::string format_time_decimal(std::int64_t ticks, std::int64_t scale);

// Shortest round-trip decimal for a double.
std::string format_double(double value);
double parse_double(const std::string& text);

// "time,price" CSV in the given unit; prices use shortest round-trip form.
// `preamble` lines (already '#'-prefixed) are written before the header.
void write_ticks_csv(const TickSeries& series, TimeUnit unit, const std::string& path,
                     const std::string& preamble);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace leadlag::io
