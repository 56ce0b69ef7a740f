// Command-line driver: trace synthesis, attack transforms, training, and
// the qubit-count scaling sweep.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qgan/bench.hpp"
#include "qgan/navdata.hpp"
#include "qgan/qgan.hpp"

namespace {

struct CommonOpts {
    qgan::ExperimentConfig cfg;
    std::string measure_mode = "mean-photon";
    std::string grad = "shift";
    std::string data_dir;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--qubits", o.cfg.qubits, "Register size n");
    cmd->add_option("--layers", o.cfg.layers, "Discriminator layer count m");
    cmd->add_option("--iters", o.cfg.iterations, "Optimization iterations per phase");
    cmd->add_option("--lr", o.cfg.learning_rate, "Gradient descent learning rate");
    cmd->add_option("--seed", o.cfg.seed, "Base RNG seed");
    cmd->add_option("--measure-mode", o.measure_mode, "Photonic readout")
        ->check(CLI::IsMember({"mean-photon", "x-quadrature"}));
    cmd->add_option("--grad", o.grad, "Discriminator gradient method")
        ->check(CLI::IsMember({"shift", "fd"}));
    cmd->add_option("--data", o.data_dir, "Directory of *.genuine.csv traces");
    cmd->add_option("--out", o.out, "Output path");
}

qgan::ExperimentConfig resolve(const CommonOpts& o) {
    qgan::ExperimentConfig cfg = o.cfg;
    cfg.measure_mode = o.measure_mode == "mean-photon" ? qgan::MeasureMode::MeanPhoton
                                                       : qgan::MeasureMode::XQuadrature;
    cfg.grad_method = o.grad == "shift" ? qgan::GradMethod::ParameterShift
                                        : qgan::GradMethod::FiniteDifference;
    cfg.data_dir = o.data_dir;
    return cfg;
}

void write_json(const nlohmann::ordered_json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open " + out + " for writing");
    os << j.dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum GAN toolkit for MAV navigation data"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "Emit genuine navigation trace CSVs");
    std::string synth_out = ".";
    int synth_count = 6;
    std::uint64_t synth_seed = 1;
    double synth_noise = 0.02;
    synth->add_option("--out", synth_out, "Output directory");
    synth->add_option("--count", synth_count, "Number of traces")->check(CLI::PositiveNumber);
    synth->add_option("--seed", synth_seed, "Seed of the first trace");
    synth->add_option("--noise", synth_noise, "Uniform noise amplitude (m/s)")
        ->check(CLI::NonNegativeNumber);

    // attack
    auto* attack = app.add_subcommand("attack", "Apply a spoofing transform to a trace file");
    std::string attack_in, attack_out, attack_kind = "swapx";
    attack->add_option("input", attack_in, "Input trace CSV")->required();
    attack->add_option("--kind", attack_kind, "Attack kind")
        ->check(CLI::IsMember({"swapx", "swapy", "swapxz", "swapxyz"}));
    attack->add_option("--out", attack_out, "Output trace CSV");

    CommonOpts disc_opts, gen_opts, run_opts, sweep_opts;
    auto* train_disc = app.add_subcommand("train-disc", "Train the discriminator");
    add_common(train_disc, disc_opts);

    auto* train_gen = app.add_subcommand("train-gen", "Train the photonic generator");
    add_common(train_gen, gen_opts);
    gen_opts.grad = "fd";
    std::string gen_params_in;
    train_gen->add_option("--params", gen_params_in,
                          "JSON report with trained discriminator omega")
        ->required();

    auto* run = app.add_subcommand("run", "Full pipeline: train discriminator, then generator");
    add_common(run, run_opts);

    auto* sweep = app.add_subcommand("sweep", "Scaling sweep over qubit counts 1..n");
    add_common(sweep, sweep_opts);
    int sweep_reps = 3;
    std::string sweep_json;
    sweep->add_option("--reps", sweep_reps, "Repetitions per qubit count")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--json", sweep_json, "Also write the sweep report as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*synth) {
            std::filesystem::create_directories(synth_out);
            for (int k = 0; k < synth_count; ++k) {
                const auto trace = qgan::synth_trace(synth_seed + k, synth_noise);
                const auto path = std::filesystem::path(synth_out) /
                                  ("trace" + std::to_string(synth_seed + k) + ".genuine.csv");
                qgan::save_trace(trace, path);
                std::cout << path.string() << '\n';
            }
        } else if (*attack) {
            const auto kind = *qgan::parse_attack(attack_kind);
            const auto trace = qgan::apply_attack(qgan::load_trace(attack_in), kind);
            std::filesystem::path out = attack_out;
            if (out.empty()) {
                std::filesystem::path in(attack_in);
                auto stem = in.stem().stem();  // strip .csv and any label
                out = in.parent_path() / (stem.string() + "." + attack_kind + ".csv");
            }
            qgan::save_trace(trace, out);
            std::cout << out.string() << '\n';
        } else if (*train_disc) {
            const auto cfg = resolve(disc_opts);
            cfg.validate();
            const auto real_sets =
                qgan::windowed_data(qgan::genuine_traces(cfg), cfg.qubits);
            auto disc = qgan::DiscriminatorParams::random_init(cfg.layers, cfg.qubits,
                                                               cfg.seed);
            auto gen = qgan::GeneratorParams::random_init(cfg.qubits, cfg.seed + 1);
            qgan::TrainConfig tc{cfg.learning_rate, cfg.iterations, cfg.seed + 2,
                                 cfg.measure_mode, cfg.grad_method};
            const auto result = qgan::train_discriminator(disc, real_sets, gen, tc);
            nlohmann::ordered_json j;
            j["qubits"] = cfg.qubits;
            j["layers"] = cfg.layers;
            j["omega"] = result.params.omega;
            j["cost_history"] = result.cost_history;
            write_json(j, disc_opts.out);
        } else if (*train_gen) {
            const auto cfg = resolve(gen_opts);
            cfg.validate();
            std::ifstream is(gen_params_in);
            if (!is) throw std::runtime_error("cannot open " + gen_params_in);
            const auto pj = nlohmann::json::parse(is);
            qgan::DiscriminatorParams disc{pj.at("layers").get<int>(),
                                           pj.at("qubits").get<int>(),
                                           pj.at("omega").get<std::vector<double>>()};
            auto gen = qgan::GeneratorParams::random_init(disc.qubits, cfg.seed + 1);
            qgan::TrainConfig tc{cfg.learning_rate, cfg.iterations, cfg.seed + 3,
                                 cfg.measure_mode, cfg.grad_method};
            const auto result = qgan::train_generator(gen, disc, tc);
            nlohmann::ordered_json j;
            j["qubits"] = disc.qubits;
            j["alpha"] = result.params.alpha;
            j["phi"] = result.params.phi;
            j["cost_history"] = result.cost_history;
            j["p_fake_true"] =
                qgan::prob_fake_true(result.params, disc, cfg.measure_mode);
            write_json(j, gen_opts.out);
        } else if (*run) {
            const auto report = qgan::run_single(resolve(run_opts));
            write_json(qgan::to_json(report), run_opts.out);
        } else if (*sweep) {
            auto cfg = resolve(sweep_opts);
            cfg.repetitions = sweep_reps;
            const int n_max = cfg.qubits;
            const auto report = qgan::run_sweep(cfg, n_max);
            if (sweep_opts.out.empty()) {
                qgan::emit_sweep_csv(report, std::cout);
            } else {
                qgan::emit_report_csv(report, sweep_opts.out);
            }
            if (!sweep_json.empty()) qgan::emit_report_json(report, sweep_json);
            for (const auto& row : report.rows)
                if (!row.ok())
                    std::cerr << "warning: n=" << row.qubits << " seed=" << row.seed
                              << " failed: " << row.error << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
