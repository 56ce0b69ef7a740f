#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "encoding.hpp"
#include "errors.hpp"
#include "photonic.hpp"
#include "statevec.hpp"

namespace qgan {

// m x n x 3 tensor of rotation angles, flattened layer-major.
struct DiscriminatorParams {
    int layers = 0;
    int qubits = 0;
    std::vector<double> omega;  // size layers * qubits * 3

    double& at(int layer, int qubit, int axis) {
        return omega[index(layer, qubit, axis)];
    }
    double at(int layer, int qubit, int axis) const {
        return omega[index(layer, qubit, axis)];
    }

    std::size_t index(int layer, int qubit, int axis) const {
        return (static_cast<std::size_t>(layer) * qubits + qubit) * 3 + axis;
    }

    static DiscriminatorParams zeros(int layers, int qubits) {
        return DiscriminatorParams{
            layers, qubits,
            std::vector<double>(static_cast<std::size_t>(layers) * qubits * 3, 0.0)};
    }

    static DiscriminatorParams random_init(int layers, int qubits, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> dist(-0.1, 0.1);
        auto p = zeros(layers, qubits);
        for (auto& w : p.omega) w = dist(rng);
        return p;
    }
};

// One displacement and one phase per qumode; 2^n qumodes.
struct GeneratorParams {
    int qubits = 0;
    std::vector<double> alpha;  // size 2^qubits
    std::vector<double> phi;    // size 2^qubits

    static GeneratorParams random_init(int qubits, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> amp(0.1, 1.0);
        std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
        GeneratorParams p;
        p.qubits = qubits;
        const std::size_t dim = std::size_t{1} << qubits;
        p.alpha.resize(dim);
        p.phi.resize(dim);
        for (auto& a : p.alpha) a = amp(rng);
        for (auto& f : p.phi) f = ang(rng);
        return p;
    }
};

// Raw wire-0 Z expectation and its probability form p = (r+1)/2.
struct Verdict {
    double r = 0.0;
    double p = 0.0;

    static Verdict from_expectation(double r) { return Verdict{r, (r + 1.0) / 2.0}; }
};

enum class GradMethod { ParameterShift, FiniteDifference };

struct TrainConfig {
    double learning_rate = 0.1;
    int iterations = 100;
    std::uint64_t seed = 0;
    MeasureMode measure_mode = MeasureMode::MeanPhoton;
    GradMethod grad_method = GradMethod::ParameterShift;
};

// Per-qubit Rot followed by the ring of CNOTs i -> (i+1) mod n.
// layer_angles is qubits x 3 row-major. For n = 1 the ring is skipped.
inline void elementary_layer(StateVector& state, const std::vector<double>& layer_angles) {
    const int n = state.qubits();
    if (layer_angles.size() != static_cast<std::size_t>(n) * 3)
        throw std::domain_error("layer angles must have n rows of 3");
    for (int q = 0; q < n; ++q)
        state.apply_rot(q, layer_angles[q * 3 + 0], layer_angles[q * 3 + 1],
                        layer_angles[q * 3 + 2]);
    if (n > 1)
        for (int q = 0; q < n; ++q) state.apply_cnot(q, (q + 1) % n);
}

inline Verdict discriminator_forward(StateVector state, const DiscriminatorParams& params) {
    if (state.qubits() != params.qubits)
        throw std::domain_error("input qubit count does not match discriminator");
    std::vector<double> layer(static_cast<std::size_t>(params.qubits) * 3);
    for (int l = 0; l < params.layers; ++l) {
        for (std::size_t k = 0; k < layer.size(); ++k)
            layer[k] = params.omega[l * layer.size() + k];
        elementary_layer(state, layer);
    }
    return Verdict::from_expectation(state.expect_z(0));
}

// Classical outputs of the 2^n single-qumode circuits D(alpha_k), R(phi_k).
inline std::vector<double> generator_forward(const GeneratorParams& params, MeasureMode mode) {
    std::vector<double> out(params.alpha.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        QumodeState q;
        q.displace(params.alpha[k]).rotate(params.phi[k]);
        out[k] = q.measure(mode);
    }
    return out;
}

inline double prob_fake_true(const GeneratorParams& gen, const DiscriminatorParams& disc,
                             MeasureMode mode) {
    const auto fake = generator_forward(gen, mode);
    return discriminator_forward(amplitude_encode(normalize(fake), disc.qubits), disc).p;
}

inline double disc_cost(const DiscriminatorParams& disc, const StateVector& real_state,
                        const StateVector& fake_state) {
    const double p_fake = discriminator_forward(fake_state, disc).p;
    const double p_real = discriminator_forward(real_state, disc).p;
    return p_fake - p_real;
}

inline double gen_cost(const GeneratorParams& gen, const DiscriminatorParams& disc,
                       MeasureMode mode) {
    return -prob_fake_true(gen, disc, mode);
}

using CostFn = std::function<double(const std::vector<double>&)>;

// ParameterShift is exact for rotation-gate angles; FiniteDifference is a
// central difference with h = 1e-5 and works for any parameter family.
inline std::vector<double> gradient(const CostFn& cost, std::vector<double> params,
                                    GradMethod method) {
    std::vector<double> g(params.size());
    if (method == GradMethod::ParameterShift) {
        const double shift = std::numbers::pi / 2.0;
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double p0 = params[i];
            params[i] = p0 + shift;
            const double plus = cost(params);
            params[i] = p0 - shift;
            const double minus = cost(params);
            params[i] = p0;
            g[i] = (plus - minus) / 2.0;
        }
    } else {
        const double h = 1e-5;
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double p0 = params[i];
            params[i] = p0 + h;
            const double plus = cost(params);
            params[i] = p0 - h;
            const double minus = cost(params);
            params[i] = p0;
            g[i] = (plus - minus) / (2.0 * h);
        }
    }
    return g;
}

template <typename Params>
struct TrainResult {
    Params params;
    std::vector<double> cost_history;  // one entry per iteration, pre-step cost
};

// Gradient descent on omega minimizing p_F - p_R. One genuine data set is
// drawn uniformly (seeded) per iteration; the fake state comes from the
// fixed generator parameters and is computed once.
inline TrainResult<DiscriminatorParams> train_discriminator(
    DiscriminatorParams disc, const std::vector<DataVector>& real_sets,
    const GeneratorParams& fake_source, const TrainConfig& cfg) {
    if (real_sets.empty())
        throw std::domain_error("train_discriminator needs at least one genuine data set");
    if (cfg.learning_rate <= 0.0)
        throw std::domain_error("learning rate must be positive");

    const int n = disc.qubits;
    const StateVector fake_state =
        amplitude_encode(normalize(generator_forward(fake_source, cfg.measure_mode)), n);
    std::vector<StateVector> real_states;
    real_states.reserve(real_sets.size());
    for (const auto& d : real_sets) real_states.push_back(amplitude_encode(d, n));

    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, real_sets.size() - 1);

    TrainResult<DiscriminatorParams> result{std::move(disc), {}};
    result.cost_history.reserve(cfg.iterations);
    for (int it = 0; it < cfg.iterations; ++it) {
        const StateVector& real_state = real_states[pick(rng)];
        const CostFn cost = [&](const std::vector<double>& omega) {
            DiscriminatorParams d{result.params.layers, result.params.qubits, omega};
            return disc_cost(d, real_state, fake_state);
        };
        result.cost_history.push_back(cost(result.params.omega));
        const auto g = gradient(cost, result.params.omega, cfg.grad_method);
        for (std::size_t i = 0; i < g.size(); ++i)
            result.params.omega[i] -= cfg.learning_rate * g[i];
    }
    return result;
}

// Gradient descent on (alpha, phi) minimizing -p_F. The shift rule does not
// apply to the photonic parameters, so only FiniteDifference is accepted.
// An all-zero generator output cannot be encoded; alpha is re-seeded with
// small random values whenever the output norm collapses below 1e-9.
inline TrainResult<GeneratorParams> train_generator(GeneratorParams gen,
                                                    const DiscriminatorParams& disc,
                                                    const TrainConfig& cfg) {
    if (cfg.grad_method == GradMethod::ParameterShift)
        throw unsupported_method_error(
            "parameter-shift gradients are not available for photonic parameters; "
            "use finite differences");
    if (cfg.learning_rate <= 0.0)
        throw std::domain_error("learning rate must be positive");

    const std::size_t dim = gen.alpha.size();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> reseed(0.01, 0.1);

    TrainResult<GeneratorParams> result{std::move(gen), {}};
    result.cost_history.reserve(cfg.iterations);
    for (int it = 0; it < cfg.iterations; ++it) {
        auto out = generator_forward(result.params, cfg.measure_mode);
        double sq = 0.0;
        for (double x : out) sq += x * x;
        if (std::sqrt(sq) < 1e-9)
            for (auto& a : result.params.alpha) a = reseed(rng);

        const CostFn cost = [&](const std::vector<double>& packed) {
            GeneratorParams g;
            g.qubits = result.params.qubits;
            g.alpha.assign(packed.begin(), packed.begin() + dim);
            g.phi.assign(packed.begin() + dim, packed.end());
            return gen_cost(g, disc, cfg.measure_mode);
        };
        std::vector<double> packed(result.params.alpha);
        packed.insert(packed.end(), result.params.phi.begin(), result.params.phi.end());
        result.cost_history.push_back(cost(packed));
        const auto g = gradient(cost, packed, GradMethod::FiniteDifference);
        for (std::size_t i = 0; i < dim; ++i) {
            result.params.alpha[i] -= cfg.learning_rate * g[i];
            result.params.phi[i] -= cfg.learning_rate * g[dim + i];
        }
    }
    return result;
}

// Qubit-circuit generator variant: the layered elementary circuit applied
// to |0...0>, fed to the discriminator as a quantum state without encoding.
inline StateVector qubit_generator_forward(const DiscriminatorParams& params) {
    StateVector state(params.qubits);
    std::vector<double> layer(static_cast<std::size_t>(params.qubits) * 3);
    for (int l = 0; l < params.layers; ++l) {
        for (std::size_t k = 0; k < layer.size(); ++k)
            layer[k] = params.omega[l * layer.size() + k];
        elementary_layer(state, layer);
    }
    return state;
}

} // namespace qgan
