#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgan {

enum class AttackKind { SwapX, SwapY, SwapXZ, SwapXYZ };

inline std::string attack_name(AttackKind kind) {
    switch (kind) {
    case AttackKind::SwapX: return "swapx";
    case AttackKind::SwapY: return "swapy";
    case AttackKind::SwapXZ: return "swapxz";
    case AttackKind::SwapXYZ: return "swapxyz";
    }
    throw std::logic_error("unknown attack kind");
}

inline std::optional<AttackKind> parse_attack(const std::string& name) {
    if (name == "swapx") return AttackKind::SwapX;
    if (name == "swapy") return AttackKind::SwapY;
    if (name == "swapxz") return AttackKind::SwapXZ;
    if (name == "swapxyz") return AttackKind::SwapXYZ;
    return std::nullopt;
}

struct NavSample {
    double t;   // seconds, strictly increasing along a trace
    double vx;  // m/s
    double vy;
    double vz;
};

struct NavTrace {
    std::vector<NavSample> samples;
    std::optional<AttackKind> attack;  // nullopt while genuine

    bool genuine() const { return !attack.has_value(); }
    std::size_t scalar_count() const { return samples.size() * 3; }
};

// Parrot-Mambo-like reference scenario: take off one meter, fly two
// horizontal circles, land. 21 samples at dt = 0.5 s keeps the flattened
// trace at 63 scalars. The 13 circle samples step the phase by 4*pi/13, so
// the left-endpoint sums of vx and vy vanish exactly at zero noise.
inline NavTrace synth_trace(std::uint64_t seed, double noise_amp) {
    if (noise_amp < 0.0)
        throw std::domain_error("noise amplitude must be nonnegative");

    constexpr double dt = 0.5;
    constexpr int takeoff_samples = 4;
    constexpr int circle_samples = 13;
    constexpr int landing_samples = 4;
    constexpr double climb_rate = 0.5;   // integrates to +1 m over takeoff
    constexpr double circle_speed = 0.5;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> noise(-noise_amp, noise_amp);
    auto jitter = [&] { return noise_amp > 0.0 ? noise(rng) : 0.0; };

    NavTrace trace;
    int k = 0;
    for (int i = 0; i < takeoff_samples; ++i, ++k)
        trace.samples.push_back({k * dt, jitter(), jitter(), climb_rate + jitter()});
    const double omega = 4.0 * std::numbers::pi / (circle_samples * dt);
    for (int i = 0; i < circle_samples; ++i, ++k) {
        const double phase = omega * i * dt;
        trace.samples.push_back({k * dt, circle_speed * std::cos(phase) + jitter(),
                                 circle_speed * std::sin(phase) + jitter(), jitter()});
    }
    for (int i = 0; i < landing_samples; ++i, ++k)
        trace.samples.push_back({k * dt, jitter(), jitter(), -climb_rate + jitter()});
    return trace;
}

// "Swapping" a coordinate mirrors it: the listed components are negated.
inline NavTrace apply_attack(NavTrace trace, AttackKind kind) {
    const bool nx = kind == AttackKind::SwapX || kind == AttackKind::SwapXZ ||
                    kind == AttackKind::SwapXYZ;
    const bool ny = kind == AttackKind::SwapY || kind == AttackKind::SwapXYZ;
    const bool nz = kind == AttackKind::SwapXZ || kind == AttackKind::SwapXYZ;
    for (auto& s : trace.samples) {
        if (nx) s.vx = -s.vx;
        if (ny) s.vy = -s.vy;
        if (nz) s.vz = -s.vz;
    }
    trace.attack = kind;
    return trace;
}

// Flattens velocities in time order (vx, vy, vz, vx, ...) and cuts them
// into chunks of exactly 2^n scalars. A trailing partial chunk is dropped,
// as are all-zero chunks, which cannot be amplitude-encoded.
inline std::vector<std::vector<double>> window(const NavTrace& trace, int qubits) {
    if (qubits < 1)
        throw std::domain_error("qubit count must be at least 1");
    std::vector<double> flat;
    flat.reserve(trace.scalar_count());
    for (const auto& s : trace.samples) {
        flat.push_back(s.vx);
        flat.push_back(s.vy);
        flat.push_back(s.vz);
    }
    const std::size_t chunk = std::size_t{1} << qubits;
    std::vector<std::vector<double>> out;
    for (std::size_t start = 0; start + chunk <= flat.size(); start += chunk) {
        std::vector<double> w(flat.begin() + start, flat.begin() + start + chunk);
        bool nonzero = false;
        for (double x : w) nonzero |= (x != 0.0);
        if (nonzero) out.push_back(std::move(w));
    }
    return out;
}

inline void save_trace(const NavTrace& trace, std::ostream& os) {
    os << "t,vx,vy,vz\n";
    char buf[128];
    for (const auto& s : trace.samples) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", s.t, s.vx, s.vy,
                      s.vz);
        os << buf;
    }
}

inline void save_trace(const NavTrace& trace, const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    save_trace(trace, os);
}

inline NavTrace load_trace(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "t,vx,vy,vz")
        throw std::runtime_error("line 1: expected header 't,vx,vy,vz'");
    NavTrace trace;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        double fields[4];
        std::string cell;
        for (int i = 0; i < 4; ++i) {
            if (!std::getline(row, cell, ','))
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": expected 4 fields");
            std::size_t used = 0;
            try {
                fields[i] = std::stod(cell, &used);
            } catch (const std::exception&) {
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": bad number '" + cell + "'");
            }
            if (used != cell.size())
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": bad number '" + cell + "'");
        }
        if (std::getline(row, cell, ','))
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected 4 fields");
        if (!trace.samples.empty() && fields[0] <= trace.samples.back().t)
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": timestamps must be strictly increasing");
        trace.samples.push_back({fields[0], fields[1], fields[2], fields[3]});
    }
    if (trace.samples.empty())
        throw std::runtime_error("trace file contains a header but no samples");
    return trace;
}

inline NavTrace load_trace(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    NavTrace trace = load_trace(is);
    // label rides on the filename: <name>.<genuine|swapx|...>.csv
    auto stem = path.stem();  // strips .csv
    trace.attack = parse_attack(stem.extension().string().empty()
                                    ? std::string{}
                                    : stem.extension().string().substr(1));
    return trace;
}

} // namespace qgan
