#include "leadlag/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "leadlag/analyze.hpp"
#include "leadlag/errors.hpp"
#include "leadlag/estimator.hpp"
#include "leadlag/io.hpp"
#include "leadlag/rng.hpp"

namespace leadlag::cli {

namespace {

using nlohmann::json;

struct TimeFlags {
    io::TimeUnit unit = io::TimeUnit::Seconds;
    std::int64_t scale() const { return io::unit_scale(unit); }
    std::int64_t resolution() const { return io::unit_resolution(unit); }

    TimeStamp parse(const std::string& text) const { return ts(io::parse_time_decimal(text, scale())); }
    std::string format(TimeStamp t) const { return io::format_time_decimal(t.ticks, scale()); }
};

// Ingestion flags shared by estimate/curve/sigplot.
struct InputFlags {
    std::string x_path;
    std::string y_path;
    std::string time_column = "time";
    std::string price_column = "price";
    std::string unit_name = "seconds";
    std::string delimiter = ",";
    bool no_header = false;
    std::int64_t subsample_x = 1;
    std::int64_t subsample_y = 1;

    void add_common(CLI::App& cmd, bool with_y) {
        cmd.add_option("--x-file,-x", x_path, "tick CSV for the X (potential leader) asset")
            ->required();
        if (with_y)
            cmd.add_option("--y-file,-y", y_path, "tick CSV for the Y asset")->required();
        cmd.add_option("--time-col", time_column, "time column name or #index (default: time)");
        cmd.add_option("--price-col", price_column, "price column name or #index (default: price)");
        cmd.add_option("--time-unit", unit_name,
                       "unit of all times in files, flags and outputs: "
                       "seconds|milliseconds|microseconds|nanoseconds");
        cmd.add_option("--delimiter", delimiter, "field delimiter (default: ,)");
        cmd.add_flag("--no-header", no_header, "files have no header row");
        cmd.add_option("--subsample-x", subsample_x, "keep 1 of every k X ticks before analysis");
        if (with_y)
            cmd.add_option("--subsample-y", subsample_y, "keep 1 of every k Y ticks");
    }

    io::TickFileSpec spec(const std::string& path, const TimeFlags& tf) const {
        if (delimiter.size() != 1) fail("bad-input", "--delimiter must be one character");
        return {path, time_column, price_column, tf.unit, delimiter[0], !no_header};
    }

    json echo(const TimeFlags& tf) const {
        json j;
        j["time_unit"] = io::time_unit_name(tf.unit);
        j["time_column"] = time_column;
        j["price_column"] = price_column;
        j["delimiter"] = delimiter;
        j["header"] = !no_header;
        j["x_file"] = x_path;
        if (!y_path.empty()) j["y_file"] = y_path;
        j["subsample_x"] = subsample_x;
        if (!y_path.empty()) j["subsample_y"] = subsample_y;
        return j;
    }
};

// Grid/horizon flags shared by estimate/curve and montecarlo.
struct GridFlags {
    std::string min_text;
    std::string max_text;
    std::string mesh_text;
    std::string delta_text;
    std::string horizon_text;

    void add(CLI::App& cmd, bool required, bool with_delta_horizon = true) {
        auto* mn = cmd.add_option("--grid-min", min_text, "smallest candidate shift");
        auto* mx = cmd.add_option("--grid-max", max_text, "largest candidate shift");
        auto* ms = cmd.add_option("--grid-mesh", mesh_text, "grid mesh (candidate spacing)");
        if (required) {
            mn->required();
            mx->required();
            ms->required();
        }
        if (with_delta_horizon) {
            cmd.add_option("--delta", delta_text,
                           "max admissible |shift|; default: max(|grid-min|,|grid-max|) + mesh");
            cmd.add_option("--horizon", horizon_text,
                           "contrast horizon T; default: earliest series end minus max |shift|");
        }
    }

    TimeStamp resolve_delta(const TimeFlags& tf) const {
        if (!delta_text.empty()) return tf.parse(delta_text);
        const TimeStamp lo = tf.parse(min_text).abs();
        const TimeStamp hi = tf.parse(max_text).abs();
        return (lo > hi ? lo : hi) + tf.parse(mesh_text);
    }

    ShiftGrid build(const TimeFlags& tf) const {
        return ShiftGrid::regular(tf.parse(min_text), tf.parse(max_text), tf.parse(mesh_text),
                                  resolve_delta(tf));
    }
};

struct OutputFlags {
    std::string format = "csv";
    std::string out = "-";

    void add(CLI::App& cmd) {
        cmd.add_option("--format", format, "output format: csv|json");
        cmd.add_option("--out,-o", out, "output path, '-' for stdout");
    }

    void check() const {
        if (format != "csv" && format != "json")
            fail("bad-input", "--format must be csv or json, got '" + format + "'");
    }

    void emit(const std::string& content) const {
        if (out == "-")
            std::cout << content;
        else
            io::write_file(out, content);
    }
};

std::string csv_document(const json& config, const std::string& header,
                         const std::vector<std::string>& rows) {
    std::string doc = "# config " + config.dump() + "\n" + header + "\n";
    for (const auto& r : rows) {
        doc += r;
        doc += '\n';
    }
    return doc;
}

double unit_value(const TimeFlags& tf, TimeStamp t) {
    // Numeric mirror of the exact decimal text (parsed back so JSON prints
    // the same digits the CSV carries).
    return io::parse_double(tf.format(t));
}

TickSeries load_series(const InputFlags& in, const std::string& path, std::int64_t sub,
                       const TimeFlags& tf) {
    TickSeries s = io::ingest(in.spec(path, tf));
    if (sub != 1) s = analyze::subsample(s, sub);
    return s;
}

// ---------------------------------------------------------------- simulate

struct SimulateCmd {
    std::uint64_t seed = 0;
    double rho = 0.0;
    double sigma1 = 1.0, sigma2 = 1.0, x0 = 0.0, y0 = 0.0;
    std::string theta_text = "0.1";
    std::string T_text = "1";
    std::string delta_text = "1";
    std::string mesh_text = "0.001";
    std::string scheme_x_text = "sync:0.001";
    std::string scheme_y_text = "sync:0.001";
    std::string window_text;
    std::string unit_name = "seconds";
    OutputFlags output;

    void add(CLI::App& cmd) {
        cmd.add_option("--seed", seed, "master seed")->required();
        cmd.add_option("--rho", rho, "correlation of the two Brownian drivers")->required();
        cmd.add_option("--theta", theta_text, "lead-lag: positive means X leads Y (default 0.1)");
        cmd.add_option("--sigma1", sigma1, "X volatility");
        cmd.add_option("--sigma2", sigma2, "Y volatility");
        cmd.add_option("--x0", x0, "X starting value");
        cmd.add_option("--y0", y0, "Y starting value");
        cmd.add_option("--T", T_text, "estimation horizon (paths run to T + delta)");
        cmd.add_option("--delta", delta_text, "max admissible |shift|");
        cmd.add_option("--sim-mesh", mesh_text, "path discretization step");
        cmd.add_option("--scheme-x", scheme_x_text,
                       "sampling for X: sync:PERIOD or uniform:COUNT:MESH");
        cmd.add_option("--scheme-y", scheme_y_text, "sampling for Y");
        cmd.add_option("--window", window_text, "sample only [0, window] of the span");
        cmd.add_option("--time-unit", unit_name, "unit of time flags and outputs");
        output.add(cmd);
    }

    int execute() const;
};

sim::SamplingScheme parse_scheme(const std::string& text, const TimeFlags& tf) {
    const auto c1 = text.find(':');
    const std::string kind = text.substr(0, c1);
    if (c1 == std::string::npos) fail("bad-scheme", "scheme '" + text + "' needs parameters");
    if (kind == "sync") return sim::SamplingScheme::synchronous(tf.parse(text.substr(c1 + 1)));
    if (kind == "uniform") {
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos)
            fail("bad-scheme", "uniform scheme needs uniform:COUNT:MESH, got '" + text + "'");
        const std::int64_t count = std::stoll(text.substr(c1 + 1, c2 - c1 - 1));
        return sim::SamplingScheme::uniform_random(count, tf.parse(text.substr(c2 + 1)));
    }
    fail("bad-scheme", "unknown sampling scheme '" + kind + "'");
}

json scheme_echo(const sim::SamplingScheme& s, const TimeFlags& tf) {
    json j;
    if (s.kind == sim::SamplingScheme::Kind::Synchronous) {
        j["kind"] = "sync";
        j["period"] = tf.format(s.period);
    } else {
        j["kind"] = "uniform";
        j["count"] = s.count;
        j["base_mesh"] = tf.format(s.base_mesh);
    }
    return j;
}

int SimulateCmd::execute() const {
    output.check();
    TimeFlags tf{io::parse_time_unit(unit_name)};

    sim::BachelierParams params;
    params.x0 = x0;
    params.y0 = y0;
    params.sigma1 = sigma1;
    params.sigma2 = sigma2;
    params.rho = rho;
    params.theta = tf.parse(theta_text);
    params.T = tf.parse(T_text);
    params.delta = tf.parse(delta_text);
    params.sim_mesh = tf.parse(mesh_text);
    params.resolution = tf.resolution();

    const auto scheme_x = parse_scheme(scheme_x_text, tf);
    const auto scheme_y = parse_scheme(scheme_y_text, tf);

    // Same per-seed split as one Monte Carlo run: stream 0 drives the path,
    // stream 1 the sampling draws.
    sim::PathPair paths = sim::simulate_bachelier(params, stream_seed(seed, 0));
    if (!window_text.empty()) paths = sim::restrict_span(paths, tf.parse(window_text));
    auto [x, y] = sim::sample(paths, scheme_x, scheme_y, stream_seed(seed, 1));

    json config;
    config["command"] = "simulate";
    config["seed"] = seed;
    config["rho"] = rho;
    config["sigma1"] = sigma1;
    config["sigma2"] = sigma2;
    config["x0"] = x0;
    config["y0"] = y0;
    config["theta"] = tf.format(params.theta);
    config["T"] = tf.format(params.T);
    config["delta"] = tf.format(params.delta);
    config["sim_mesh"] = tf.format(params.sim_mesh);
    config["scheme_x"] = scheme_echo(scheme_x, tf);
    config["scheme_y"] = scheme_echo(scheme_y, tf);
    if (!window_text.empty()) config["window"] = tf.format(tf.parse(window_text));
    config["time_unit"] = io::time_unit_name(tf.unit);
    config["format"] = output.format;
    config["out"] = output.out;

    if (output.format == "csv") {
        if (output.out == "-")
            fail("bad-input", "simulate csv output needs --out as a file prefix");
        const std::string preamble = "# config " + config.dump() + "\n";
        io::write_ticks_csv(x, tf.unit, output.out + ".x.csv", preamble);
        io::write_ticks_csv(y, tf.unit, output.out + ".y.csv", preamble);
        return 0;
    }
    json doc;
    doc["config"] = config;
    auto series_json = [&](const TickSeries& s) {
        json series;
        series["label"] = s.label;
        json times = json::array();
        json prices = json::array();
        for (std::size_t i = 0; i < s.size(); ++i) {
            times.push_back(unit_value(tf, s.times[i]));
            prices.push_back(s.prices[i]);
        }
        series["times"] = std::move(times);
        series["prices"] = std::move(prices);
        return series;
    };
    doc["x"] = series_json(x);
    doc["y"] = series_json(y);
    output.emit(doc.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------- estimate and curve

struct EstimateCmd {
    InputFlags input;
    GridFlags grid;
    OutputFlags output;
    bool curve_mode = false;

    void add(CLI::App& cmd) {
        input.add_common(cmd, true);
        grid.add(cmd, true);
        output.add(cmd);
    }

    int execute() const {
        output.check();
        TimeFlags tf{io::parse_time_unit(input.unit_name)};
        const TickSeries x = load_series(input, input.x_path, input.subsample_x, tf);
        const TickSeries y = load_series(input, input.y_path, input.subsample_y, tf);
        const ShiftGrid g = grid.build(tf);
        const TimeStamp horizon = grid.horizon_text.empty() ? default_horizon(x, y, g)
                                                            : tf.parse(grid.horizon_text);

        json config = input.echo(tf);
        config["command"] = curve_mode ? "curve" : "estimate";
        config["grid_min"] = tf.format(g.min_shift());
        config["grid_max"] = tf.format(g.max_shift());
        config["grid_mesh"] = tf.format(tf.parse(grid.mesh_text));
        config["delta"] = tf.format(grid.resolve_delta(tf));
        config["horizon"] = tf.format(horizon);
        config["format"] = output.format;
        config["out"] = output.out;

        if (curve_mode) {
            const ContrastCurve curve =
                contrast_curve(build_intervals(x), build_intervals(y), g, horizon);
            if (output.format == "csv") {
                std::vector<std::string> rows;
                rows.reserve(curve.shifts.size());
                for (std::size_t i = 0; i < curve.shifts.size(); ++i)
                    rows.push_back(tf.format(curve.shifts[i]) + "," +
                                   io::format_double(curve.values[i]));
                output.emit(csv_document(config, "shift,contrast", rows));
            } else {
                json doc;
                doc["config"] = config;
                json rows = json::array();
                for (std::size_t i = 0; i < curve.shifts.size(); ++i)
                    rows.push_back({{"shift", unit_value(tf, curve.shifts[i])},
                                    {"contrast", curve.values[i]}});
                doc["curve"] = std::move(rows);
                doc["argmax_shift"] = unit_value(tf, curve.argmax_shift);
                doc["argmax_abs_value"] = curve.argmax_abs_value;
                output.emit(doc.dump(2) + "\n");
            }
            return 0;
        }

        const LeadLagEstimate est = estimate_leadlag(x, y, g, horizon);
        if (output.format == "csv") {
            const std::string row = tf.format(est.theta_hat) + "," +
                                    io::format_double(est.contrast_at_max) + "," +
                                    tf.format(est.mesh_delta_n) + "," +
                                    std::to_string(est.grid_size);
            output.emit(csv_document(config, "theta_hat,contrast_at_max,mesh_delta,grid_size",
                                     {row}));
        } else {
            json doc;
            doc["config"] = config;
            doc["theta_hat"] = unit_value(tf, est.theta_hat);
            doc["contrast_at_max"] = est.contrast_at_max;
            doc["mesh_delta"] = unit_value(tf, est.mesh_delta_n);
            doc["grid_size"] = est.grid_size;
            output.emit(doc.dump(2) + "\n");
        }
        return 0;
    }
};

// ------------------------------------------------------------------ sigplot

struct SigplotCmd {
    InputFlags input;
    OutputFlags output;
    std::vector<std::int64_t> ks = {1, 2, 5, 10, 20};

    void add(CLI::App& cmd) {
        input.add_common(cmd, false);
        cmd.add_option("--ks", ks, "subsampling factors (default 1 2 5 10 20)")
            ->delimiter(',');
        output.add(cmd);
    }

    int execute() const {
        output.check();
        TimeFlags tf{io::parse_time_unit(input.unit_name)};
        const TickSeries x = load_series(input, input.x_path, input.subsample_x, tf);
        const analyze::SignaturePlot plot = analyze::signature_plot(x, ks);

        json config = input.echo(tf);
        config["command"] = "sigplot";
        config["ks"] = ks;
        config["format"] = output.format;
        config["out"] = output.out;

        if (output.format == "csv") {
            std::vector<std::string> rows;
            for (std::size_t i = 0; i < plot.ks.size(); ++i)
                rows.push_back(std::to_string(plot.ks[i]) + "," +
                               io::format_double(plot.realized_vols[i]));
            output.emit(csv_document(config, "k,realized_vol", rows));
        } else {
            json doc;
            doc["config"] = config;
            json rows = json::array();
            for (std::size_t i = 0; i < plot.ks.size(); ++i)
                rows.push_back({{"k", plot.ks[i]}, {"realized_vol", plot.realized_vols[i]}});
            doc["signature"] = std::move(rows);
            output.emit(doc.dump(2) + "\n");
        }
        return 0;
    }
};

// --------------------------------------------------------------- montecarlo

struct MontecarloCmd {
    std::uint64_t seed = 0;
    double rho = 0.0;
    double sigma1 = 1.0, sigma2 = 1.0, x0 = 0.0, y0 = 0.0;
    std::string theta_text = "0.1";
    std::string T_text = "1";
    std::string delta_text = "1";
    std::string mesh_text = "0.001";
    std::string period_text;
    std::int64_t uniform_count = 0;
    std::string base_mesh_text = "0.001";
    std::string window_text;
    std::string horizon_text;
    int n_runs = 300;
    std::string unit_name = "seconds";
    GridFlags grid;
    OutputFlags output;

    void add(CLI::App& cmd) {
        cmd.add_option("--seed", seed, "master seed")->required();
        cmd.add_option("--rho", rho, "driver correlation")->required();
        cmd.add_option("--theta", theta_text, "true lead-lag (default 0.1)");
        cmd.add_option("--sigma1", sigma1, "X volatility");
        cmd.add_option("--sigma2", sigma2, "Y volatility");
        cmd.add_option("--T", T_text, "estimation horizon");
        cmd.add_option("--delta", delta_text, "max admissible |shift| (default 1)");
        cmd.add_option("--sim-mesh", mesh_text, "path discretization step");
        cmd.add_option("--period", period_text,
                       "synchronous sampling period for both assets (default: grid mesh)");
        cmd.add_option("--uniform-count", uniform_count,
                       "sample this many uniform random times per asset instead");
        cmd.add_option("--base-mesh", base_mesh_text, "candidate mesh for uniform sampling");
        cmd.add_option("--window", window_text, "sample only [0, window] of the span");
        cmd.add_option("--n-runs", n_runs, "number of Monte Carlo runs (default 300)");
        cmd.add_option("--horizon", horizon_text, "contrast horizon (default: min(T, series end))");
        cmd.add_option("--time-unit", unit_name, "unit of time flags and outputs");
        grid.add(cmd, false, false);
        output.add(cmd);
    }

    int execute() const {
        output.check();
        TimeFlags tf{io::parse_time_unit(unit_name)};

        sim::BachelierParams params;
        params.x0 = x0;
        params.y0 = y0;
        params.sigma1 = sigma1;
        params.sigma2 = sigma2;
        params.rho = rho;
        params.theta = tf.parse(theta_text);
        params.T = tf.parse(T_text);
        params.delta = tf.parse(delta_text);
        params.sim_mesh = tf.parse(mesh_text);
        params.resolution = tf.resolution();

        sim::SamplingScheme scheme = sim::SamplingScheme::synchronous(params.sim_mesh);
        TimeStamp grid_mesh;
        if (!grid.mesh_text.empty()) grid_mesh = tf.parse(grid.mesh_text);
        if (uniform_count > 0) {
            scheme = sim::SamplingScheme::uniform_random(uniform_count, tf.parse(base_mesh_text));
            if (grid_mesh.ticks == 0) grid_mesh = tf.parse(base_mesh_text);
        } else {
            const TimeStamp period =
                period_text.empty() ? (grid_mesh.ticks != 0 ? grid_mesh : params.sim_mesh)
                                    : tf.parse(period_text);
            scheme = sim::SamplingScheme::synchronous(period);
            if (grid_mesh.ticks == 0) grid_mesh = period;
        }
        if (grid_mesh.ticks <= 0) fail("bad-grid", "grid mesh must be positive");

        const ShiftGrid g =
            grid.min_text.empty() || grid.max_text.empty()
                ? analyze::table_grid(params.theta, grid_mesh, params.delta)
                : ShiftGrid::regular(tf.parse(grid.min_text), tf.parse(grid.max_text), grid_mesh,
                                     params.delta);

        analyze::McOptions options;
        if (!window_text.empty()) options.window = tf.parse(window_text);
        if (!horizon_text.empty()) options.horizon = tf.parse(horizon_text);

        const analyze::MonteCarloReport report =
            analyze::montecarlo_table(params, scheme, scheme, g, n_runs, seed, options);

        json config;
        config["command"] = "montecarlo";
        config["seed"] = seed;
        config["rho"] = rho;
        config["sigma1"] = sigma1;
        config["sigma2"] = sigma2;
        config["theta"] = tf.format(params.theta);
        config["T"] = tf.format(params.T);
        config["delta"] = tf.format(params.delta);
        config["sim_mesh"] = tf.format(params.sim_mesh);
        config["scheme"] = scheme_echo(scheme, tf);
        if (!window_text.empty()) config["window"] = tf.format(*options.window);
        config["n_runs"] = n_runs;
        config["grid_min"] = tf.format(g.min_shift());
        config["grid_max"] = tf.format(g.max_shift());
        config["grid_mesh"] = tf.format(grid_mesh);
        config["horizon"] = tf.format(report.resolved_horizon);
        config["time_unit"] = io::time_unit_name(tf.unit);
        config["format"] = output.format;
        config["out"] = output.out;

        if (output.format == "csv") {
            std::vector<std::string> rows;
            for (const auto& [ticks, count] : report.histogram)
                rows.push_back(io::format_time_decimal(ticks, tf.scale()) + "," +
                               std::to_string(count));
            output.emit(csv_document(config, "theta_hat,count", rows));
        } else {
            json doc;
            doc["config"] = config;
            json rows = json::array();
            for (const auto& [ticks, count] : report.histogram)
                rows.push_back({{"theta_hat", unit_value(tf, ts(ticks))}, {"count", count}});
            doc["histogram"] = std::move(rows);
            output.emit(doc.dump(2) + "\n");
        }
        return 0;
    }
};

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{
        "Lead-lag estimation between two asynchronously observed price series.\n"
        "Sign convention: a positive estimate means the X asset leads Y."};
    app.require_subcommand(1);

    SimulateCmd simulate;
    auto* sim_cmd = app.add_subcommand("simulate", "generate a correlated tick-data pair");
    simulate.add(*sim_cmd);

    EstimateCmd estimate;
    auto* est_cmd = app.add_subcommand("estimate", "estimate the lead-lag between two tick files");
    estimate.add(*est_cmd);

    EstimateCmd curve;
    curve.curve_mode = true;
    auto* curve_cmd = app.add_subcommand("curve", "contrast value at every candidate shift");
    curve.add(*curve_cmd);

    SigplotCmd sigplot;
    auto* sig_cmd = app.add_subcommand("sigplot", "signature plot (realized vol vs subsampling)");
    sigplot.add(*sig_cmd);

    MontecarloCmd montecarlo;
    auto* mc_cmd = app.add_subcommand("montecarlo", "repeated simulate/sample/estimate histogram");
    montecarlo.add(*mc_cmd);

    try {
        app.parse(argc, argv);
        if (sim_cmd->parsed()) return simulate.execute();
        if (est_cmd->parsed()) return estimate.execute();
        if (curve_cmd->parsed()) return curve.execute();
        if (sig_cmd->parsed()) return sigplot.execute();
        if (mc_cmd->parsed()) return montecarlo.execute();
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << "\n";
        return 1;
    }
}

int run(const std::vector<std::string>& args) {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.emplace_back("leadlag");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& a : full) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace leadlag::cli
