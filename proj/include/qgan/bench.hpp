#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "encoding.hpp"
#include "errors.hpp"
#include "navdata.hpp"
#include "qgan.hpp"

namespace qgan {

struct ExperimentConfig {
    int qubits = 2;
    int layers = 2;
    int iterations = 100;
    double learning_rate = 0.1;
    std::uint64_t seed = 42;
    MeasureMode measure_mode = MeasureMode::MeanPhoton;
    GradMethod grad_method = GradMethod::ParameterShift;
    std::filesystem::path data_dir;  // empty: synthesize the six genuine traces
    int repetitions = 3;             // sweep repetitions per qubit count

    void validate() const {
        if (qubits < 1 || qubits > 8)
            throw configuration_error("qubit count must be in [1, 8]");
        if (layers < 1) throw configuration_error("layer count must be at least 1");
        if (iterations < 0) throw configuration_error("iterations must be nonnegative");
        if (learning_rate <= 0.0)
            throw configuration_error("learning rate must be positive");
        if (repetitions < 1)
            throw configuration_error("repetitions must be at least 1");
    }
};

struct RunReport {
    ExperimentConfig config;
    std::vector<double> disc_history;
    std::vector<double> gen_history;
    double p_real_true = 0.0;
    double p_fake_true = 0.0;
    double disc_ms = 0.0;
    double gen_ms = 0.0;
    DiscriminatorParams disc_params;
    GeneratorParams gen_params;
};

struct SweepRow {
    int qubits = 0;
    int layers = 0;
    int iterations = 0;
    double learning_rate = 0.0;
    std::uint64_t seed = 0;
    double disc_ms = 0.0;
    double gen_ms = 0.0;
    double p_real_true = 0.0;
    double p_fake_true = 0.0;
    std::string error;  // empty on success

    bool ok() const { return error.empty(); }
};

struct SweepReport {
    std::vector<SweepRow> rows;
};

// The six genuine data sets: seeds 1..6 with 0.02 m/s noise, or every
// *.genuine.csv found under the configured directory.
inline std::vector<NavTrace> genuine_traces(const ExperimentConfig& cfg) {
    std::vector<NavTrace> traces;
    if (!cfg.data_dir.empty()) {
        std::vector<std::filesystem::path> paths;
        for (const auto& entry : std::filesystem::directory_iterator(cfg.data_dir)) {
            const auto name = entry.path().filename().string();
            if (name.ends_with(".genuine.csv")) paths.push_back(entry.path());
        }
        std::sort(paths.begin(), paths.end());
        for (const auto& p : paths) traces.push_back(load_trace(p));
    }
    if (traces.empty())
        for (std::uint64_t s = 1; s <= 6; ++s)
            traces.push_back(synth_trace(s, 0.02));
    return traces;
}

inline std::vector<DataVector> windowed_data(const std::vector<NavTrace>& traces,
                                             int qubits) {
    std::vector<DataVector> sets;
    for (const auto& t : traces)
        for (auto& w : window(t, qubits)) sets.push_back(normalize(w));
    return sets;
}

// Full pipeline for one configuration: window the genuine traces, train
// the discriminator, then the generator, timing the optimizer loops only.
inline RunReport run_single(const ExperimentConfig& cfg) {
    cfg.validate();
    using clock = std::chrono::steady_clock;
    auto ms_between = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };

    const auto real_sets = windowed_data(genuine_traces(cfg), cfg.qubits);
    if (real_sets.empty())
        throw configuration_error(
            "no encodable windows: traces are too short for 2^" +
            std::to_string(cfg.qubits) + " amplitudes");

    auto disc = DiscriminatorParams::random_init(cfg.layers, cfg.qubits, cfg.seed);
    auto gen = GeneratorParams::random_init(cfg.qubits, cfg.seed + 1);

    TrainConfig disc_cfg{cfg.learning_rate, cfg.iterations, cfg.seed + 2,
                         cfg.measure_mode, cfg.grad_method};
    TrainConfig gen_cfg{cfg.learning_rate, cfg.iterations, cfg.seed + 3,
                        cfg.measure_mode, GradMethod::FiniteDifference};

    RunReport report;
    report.config = cfg;

    const auto t0 = clock::now();
    auto disc_result = train_discriminator(disc, real_sets, gen, disc_cfg);
    const auto t1 = clock::now();
    auto gen_result = train_generator(gen, disc_result.params, gen_cfg);
    const auto t2 = clock::now();

    report.disc_ms = ms_between(t0, t1);
    report.gen_ms = ms_between(t1, t2);
    report.disc_history = std::move(disc_result.cost_history);
    report.gen_history = std::move(gen_result.cost_history);

    double p_real = 0.0;
    for (const auto& d : real_sets)
        p_real +=
            discriminator_forward(amplitude_encode(d, cfg.qubits), disc_result.params).p;
    report.p_real_true = p_real / static_cast<double>(real_sets.size());
    report.p_fake_true =
        prob_fake_true(gen_result.params, disc_result.params, cfg.measure_mode);
    report.disc_params = std::move(disc_result.params);
    report.gen_params = std::move(gen_result.params);
    return report;
}

// One row per (qubit count, repetition); failures are recorded in the row
// and the sweep keeps going.
inline SweepReport run_sweep(const ExperimentConfig& base, int n_max) {
    if (n_max < 1 || n_max > 8)
        throw configuration_error("sweep qubit cap must be in [1, 8]");
    SweepReport sweep;
    for (int n = 1; n <= n_max; ++n) {
        for (int rep = 0; rep < base.repetitions; ++rep) {
            ExperimentConfig cfg = base;
            cfg.qubits = n;
            cfg.seed = base.seed + static_cast<std::uint64_t>(rep);
            SweepRow row;
            row.qubits = n;
            row.layers = cfg.layers;
            row.iterations = cfg.iterations;
            row.learning_rate = cfg.learning_rate;
            row.seed = cfg.seed;
            try {
                const RunReport r = run_single(cfg);
                row.disc_ms = r.disc_ms;
                row.gen_ms = r.gen_ms;
                row.p_real_true = r.p_real_true;
                row.p_fake_true = r.p_fake_true;
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            sweep.rows.push_back(std::move(row));
        }
    }
    return sweep;
}

namespace detail {

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void check_finite(double v, const char* field) {
    if (!std::isfinite(v))
        throw std::runtime_error(std::string("non-finite value in report field ") + field);
}

} // namespace detail

inline const char* measure_mode_name(MeasureMode m) {
    return m == MeasureMode::MeanPhoton ? "mean-photon" : "x-quadrature";
}

inline const char* grad_method_name(GradMethod g) {
    return g == GradMethod::ParameterShift ? "shift" : "fd";
}

inline nlohmann::ordered_json to_json(const RunReport& r) {
    detail::check_finite(r.p_real_true, "p_real_true");
    detail::check_finite(r.p_fake_true, "p_fake_true");
    detail::check_finite(r.disc_ms, "disc_ms");
    detail::check_finite(r.gen_ms, "gen_ms");
    for (double c : r.disc_history) detail::check_finite(c, "disc_history");
    for (double c : r.gen_history) detail::check_finite(c, "gen_history");
    nlohmann::ordered_json j;
    j["config"] = {{"qubits", r.config.qubits},
                   {"layers", r.config.layers},
                   {"iterations", r.config.iterations},
                   {"learning_rate", r.config.learning_rate},
                   {"seed", r.config.seed},
                   {"measure_mode", measure_mode_name(r.config.measure_mode)},
                   {"grad_method", grad_method_name(r.config.grad_method)}};
    j["disc_cost_history"] = r.disc_history;
    j["gen_cost_history"] = r.gen_history;
    j["p_real_true"] = r.p_real_true;
    j["p_fake_true"] = r.p_fake_true;
    j["disc_ms"] = r.disc_ms;
    j["gen_ms"] = r.gen_ms;
    j["disc_omega"] = r.disc_params.omega;
    j["gen_alpha"] = r.gen_params.alpha;
    j["gen_phi"] = r.gen_params.phi;
    return j;
}

inline constexpr const char* kSweepCsvHeader =
    "n,m,iters,lr,seed,disc_ms,gen_ms,p_real_true,p_fake_true";

inline std::string to_csv_row(const SweepRow& row) {
    detail::check_finite(row.disc_ms, "disc_ms");
    detail::check_finite(row.gen_ms, "gen_ms");
    detail::check_finite(row.p_real_true, "p_real_true");
    detail::check_finite(row.p_fake_true, "p_fake_true");
    std::string s;
    s += std::to_string(row.qubits) + ',' + std::to_string(row.layers) + ',';
    s += std::to_string(row.iterations) + ',' + detail::fmt_double(row.learning_rate);
    s += ',' + std::to_string(row.seed) + ',' + detail::fmt_double(row.disc_ms);
    s += ',' + detail::fmt_double(row.gen_ms) + ',' + detail::fmt_double(row.p_real_true);
    s += ',' + detail::fmt_double(row.p_fake_true);
    return s;
}

// Successful rows go to the CSV body; failed rows are kept out of the
// fixed-schema CSV and surface through the JSON report instead.
inline void emit_sweep_csv(const SweepReport& sweep, std::ostream& os) {
    os << kSweepCsvHeader << '\n';
    for (const auto& row : sweep.rows)
        if (row.ok()) os << to_csv_row(row) << '\n';
}

inline nlohmann::ordered_json to_json(const SweepReport& sweep) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : sweep.rows) {
        nlohmann::ordered_json j{{"n", row.qubits},
                                 {"m", row.layers},
                                 {"iters", row.iterations},
                                 {"lr", row.learning_rate},
                                 {"seed", row.seed}};
        if (row.ok()) {
            j["disc_ms"] = row.disc_ms;
            j["gen_ms"] = row.gen_ms;
            j["p_real_true"] = row.p_real_true;
            j["p_fake_true"] = row.p_fake_true;
        } else {
            j["error"] = row.error;
        }
        rows.push_back(std::move(j));
    }
    return nlohmann::ordered_json{{"rows", std::move(rows)}};
}

template <typename Report>
void emit_report_json(const Report& report, const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << to_json(report).dump(2) << '\n';
}

inline void emit_report_csv(const SweepReport& sweep, const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    emit_sweep_csv(sweep, os);
}

} // namespace qgan
