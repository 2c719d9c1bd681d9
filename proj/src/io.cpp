#include "leadlag/io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "leadlag/errors.hpp"

namespace leadlag::io {

namespace {

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, delim)) out.push_back(cell);
    if (!line.empty() && line.back() == delim) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

TimeUnit parse_time_unit(const std::string& name) {
    if (name == "seconds" || name == "s") return TimeUnit::Seconds;
    if (name == "milliseconds" || name == "ms") return TimeUnit::Milliseconds;
    if (name == "microseconds" || name == "us") return TimeUnit::Microseconds;
    if (name == "nanoseconds" || name == "ns") return TimeUnit::Nanoseconds;
    fail("bad-unit", "unknown time unit '" + name + "'");
}

std::string time_unit_name(TimeUnit unit) {
    switch (unit) {
        case TimeUnit::Seconds: return "seconds";
        case TimeUnit::Milliseconds: return "milliseconds";
        case TimeUnit::Microseconds: return "microseconds";
        case TimeUnit::Nanoseconds: return "nanoseconds";
    }
    return "?";
}

std::int64_t unit_resolution(TimeUnit unit) {
    return unit == TimeUnit::Nanoseconds ? 1'000'000'000 : 1'000'000;
}

std::int64_t unit_scale(TimeUnit unit) {
    switch (unit) {
        case TimeUnit::Seconds: return 1'000'000;
        case TimeUnit::Milliseconds: return 1'000;
        case TimeUnit::Microseconds: return 1;
        case TimeUnit::Nanoseconds: return 1;
    }
    return 1;
}

std::int64_t parse_time_decimal(const std::string& text, std::int64_t scale) {
    const std::string s = trim(text);
    if (s.empty()) fail("parse", "empty time field");
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    std::int64_t digits_per_unit = 0;
    for (std::int64_t v = scale; v > 1; v /= 10) ++digits_per_unit;

    __int128 value = 0;
    bool any_int = false;
    for (; pos < s.size() && s[pos] >= '0' && s[pos] <= '9'; ++pos) {
        value = value * 10 + (s[pos] - '0');
        any_int = true;
        if (value > static_cast<__int128>(INT64_MAX)) fail("unit-overflow", "time value overflows");
    }
    value *= scale;
    if (value > static_cast<__int128>(INT64_MAX)) fail("unit-overflow", "time value overflows");
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        std::int64_t frac_digits = 0;
        std::int64_t frac = 0;
        for (; pos < s.size() && s[pos] >= '0' && s[pos] <= '9'; ++pos) {
            ++frac_digits;
            if (frac_digits > digits_per_unit) {
                if (s[pos] != '0')
                    fail("time-precision", "time '" + s + "' is finer than the declared unit");
                continue;  // trailing zeros beyond the scale are harmless
            }
            frac = frac * 10 + (s[pos] - '0');
        }
        if (frac_digits == 0 && !any_int) fail("parse", "malformed time '" + s + "'");
        std::int64_t mult = scale;
        for (std::int64_t i = 0; i < std::min(frac_digits, digits_per_unit); ++i) mult /= 10;
        value += static_cast<__int128>(frac) * mult;
    } else if (!any_int) {
        fail("parse", "malformed time '" + s + "'");
    }
    if (pos != s.size()) fail("parse", "malformed time '" + s + "'");
    if (value > static_cast<__int128>(INT64_MAX)) fail("unit-overflow", "time value overflows");
    return negative ? -static_cast<std::int64_t>(value) : static_cast<std::int64_t>(value);
}

std::string format_time_decimal(std::int64_t ticks, std::int64_t scale) {
    const bool negative = ticks < 0;
    const std::uint64_t mag = negative ? static_cast<std::uint64_t>(-(ticks + 1)) + 1
                                       : static_cast<std::uint64_t>(ticks);
    const std::uint64_t uscale = static_cast<std::uint64_t>(scale);
    std::string out = negative ? "-" : "";
    out += std::to_string(mag / uscale);
    std::uint64_t frac = mag % uscale;
    if (frac != 0) {
        std::string digits;
        for (std::uint64_t v = uscale / 10; v >= 1; v /= 10) {
            digits += static_cast<char>('0' + frac / v);
            frac %= v;
            if (v == 1) break;
        }
        while (!digits.empty() && digits.back() == '0') digits.pop_back();
        out += '.';
        out += digits;
    }
    return out;
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
    const std::string s = trim(text);
    double value = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        fail("parse", "malformed number '" + s + "'");
    if (!std::isfinite(value)) fail("parse", "non-finite number '" + s + "'");
    return value;
}

namespace {

std::size_t resolve_column(const std::string& name, const std::vector<std::string>& header,
                           bool has_header) {
    if (!name.empty() && name[0] == '#') {
        const long idx = std::strtol(name.c_str() + 1, nullptr, 10);
        if (idx < 0) fail("bad-column", "bad column index '" + name + "'");
        return static_cast<std::size_t>(idx);
    }
    if (!has_header)
        fail("bad-column", "column '" + name + "' needs a header row; use #index instead");
    for (std::size_t i = 0; i < header.size(); ++i)
        if (trim(header[i]) == name) return i;
    fail("bad-column", "column '" + name + "' not found in header");
}

}  // namespace

TickSeries ingest(const TickFileSpec& spec) {
    std::ifstream in(spec.path);
    if (!in) fail("io", "cannot open '" + spec.path + "'");

    TickSeries series;
    series.label = spec.path;
    series.resolution = unit_resolution(spec.time_unit);
    const std::int64_t scale = unit_scale(spec.time_unit);

    std::string line;
    std::size_t line_no = 0;
    bool header_done = !spec.header;
    std::size_t time_idx = 0;
    std::size_t price_idx = 1;
    if (!spec.header) {
        time_idx = resolve_column(spec.time_column == "time" ? "#0" : spec.time_column, {}, false);
        price_idx =
            resolve_column(spec.price_column == "price" ? "#1" : spec.price_column, {}, false);
    }

    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto cells = split(line, spec.delimiter);
        if (!header_done) {
            time_idx = resolve_column(spec.time_column, cells, true);
            price_idx = resolve_column(spec.price_column, cells, true);
            header_done = true;
            continue;
        }
        if (time_idx >= cells.size() || price_idx >= cells.size())
            fail("parse", spec.path + ": row " + std::to_string(line_no) + " has " +
                              std::to_string(cells.size()) + " column(s), need " +
                              std::to_string(std::max(time_idx, price_idx) + 1));
        TimeStamp t_ticks;
        double price;
        try {
            t_ticks = ts(parse_time_decimal(cells[time_idx], scale));
            price = parse_double(cells[price_idx]);
        } catch (const Error& e) {
            fail(e.code(), spec.path + ": row " + std::to_string(line_no) + ": " + e.what());
        }
        if (!series.times.empty()) {
            if (t_ticks == series.times.back())
                fail("time-order",
                     spec.path + ": row " + std::to_string(line_no) + ": duplicate timestamp");
            if (t_ticks < series.times.back())
                fail("time-order",
                     spec.path + ": row " + std::to_string(line_no) + ": timestamps not sorted");
        }
        series.times.push_back(t_ticks);
        series.prices.push_back(price);
    }
    if (series.times.empty()) fail("parse", spec.path + ": no data rows");
    series.validate();
    return series;
}

void write_ticks_csv(const TickSeries& series, TimeUnit unit, const std::string& path,
                     const std::string& preamble) {
    if (unit_resolution(unit) != series.resolution)
        fail("bad-unit", "series resolution does not match the requested unit");
    const std::int64_t scale = unit_scale(unit);
    std::string out = preamble;
    out += "time,price\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += format_time_decimal(series.times[i].ticks, scale);
        out += ',';
        out += format_double(series.prices[i]);
        out += '\n';
    }
    write_file(path, out);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("io", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("io", "cannot write '" + path + "'");
    out << content;
    if (!out) fail("io", "short write to '" + path + "'");
}

}  // namespace leadlag::io
