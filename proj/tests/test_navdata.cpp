#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include "qgan/navdata.hpp"

using namespace qgan;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double dt = 0.5;

NavTrace random_trace(std::mt19937_64& rng, int samples = 10) {
    std::uniform_real_distribution<double> v(-2, 2);
    NavTrace t;
    for (int i = 0; i < samples; ++i)
        t.samples.push_back({i * 0.1, v(rng), v(rng), v(rng)});
    return t;
}
} // namespace

TEST_CASE("synthetic trace respects the scenario budget") {
    const auto t = synth_trace(1, 0.0);
    CHECK(t.scalar_count() <= 63);
    CHECK(t.genuine());
    for (std::size_t i = 1; i < t.samples.size(); ++i)
        REQUIRE(t.samples[i].t > t.samples[i - 1].t);
}

TEST_CASE("noise-free trace returns to the ground") {
    const auto t = synth_trace(3, 0.0);
    double height = 0.0;
    for (const auto& s : t.samples) height += s.vz * dt;
    CHECK_THAT(height, WithinAbs(0.0, 1e-9));
}

TEST_CASE("noise-free trace is phase structured") {
    const auto t = synth_trace(5, 0.0);
    REQUIRE(t.samples.size() == 21);
    for (int i = 0; i < 4; ++i) REQUIRE(t.samples[i].vz > 0);
    for (int i = 4; i < 17; ++i) REQUIRE(std::abs(t.samples[i].vz) < 1e-9);
    for (int i = 17; i < 21; ++i) REQUIRE(t.samples[i].vz < 0);
}

TEST_CASE("circle phase closes: quadrature oracle") {
    // The analytic integrals of v cos(wt) and v sin(wt) over two full
    // periods vanish; the left-endpoint sum at 13 equally spaced phase
    // steps must agree within the rectangle-rule error bound
    // (b - a) * h * max|f'| / 2.
    const auto t = synth_trace(2, 0.0);
    double sx = 0.0, sy = 0.0;
    for (int i = 4; i < 17; ++i) {
        sx += t.samples[i].vx * dt;
        sy += t.samples[i].vy * dt;
    }
    const double omega = 4.0 * std::numbers::pi / (13 * dt);
    const double bound = 6.5 * dt * (0.5 * omega) / 2.0;
    CHECK(std::abs(sx) <= bound);
    CHECK(std::abs(sy) <= bound);
    // the chosen sampling makes the sums vanish exactly
    CHECK_THAT(sx, WithinAbs(0.0, 1e-9));
    CHECK_THAT(sy, WithinAbs(0.0, 1e-9));
}

TEST_CASE("same seed gives the identical trace") {
    const auto a = synth_trace(7, 0.02);
    const auto b = synth_trace(7, 0.02);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].vx == b.samples[i].vx);
        CHECK(a.samples[i].vy == b.samples[i].vy);
        CHECK(a.samples[i].vz == b.samples[i].vz);
    }
}

TEST_CASE("attack transforms negate the listed components") {
    NavTrace t;
    t.samples.push_back({0.0, 1.0, 2.0, 3.0});

    const auto sx = apply_attack(t, AttackKind::SwapX);
    CHECK(sx.samples[0].vx == -1.0);
    CHECK(sx.samples[0].vy == 2.0);
    CHECK(sx.samples[0].vz == 3.0);
    CHECK(sx.attack == AttackKind::SwapX);

    const auto sy = apply_attack(t, AttackKind::SwapY);
    CHECK(sy.samples[0].vy == -2.0);

    const auto sxz = apply_attack(t, AttackKind::SwapXZ);
    CHECK(sxz.samples[0].vx == -1.0);
    CHECK(sxz.samples[0].vz == -3.0);

    const auto all = apply_attack(t, AttackKind::SwapXYZ);
    CHECK(all.samples[0].vx == -1.0);
    CHECK(all.samples[0].vy == -2.0);
    CHECK(all.samples[0].vz == -3.0);
}

TEST_CASE("attacks are involutions on the velocities") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = random_trace(rng);
        for (auto kind : {AttackKind::SwapX, AttackKind::SwapY, AttackKind::SwapXZ,
                          AttackKind::SwapXYZ}) {
            const auto twice = apply_attack(apply_attack(t, kind), kind);
            for (std::size_t i = 0; i < t.samples.size(); ++i) {
                REQUIRE(twice.samples[i].vx == t.samples[i].vx);
                REQUIRE(twice.samples[i].vy == t.samples[i].vy);
                REQUIRE(twice.samples[i].vz == t.samples[i].vz);
            }
        }
    }
}

TEST_CASE("windowing arithmetic") {
    const auto t = synth_trace(1, 0.01);  // 63 scalars, noise keeps chunks nonzero
    CHECK(window(t, 2).size() == 15);     // 15 chunks of 4, 3 scalars dropped
    CHECK(window(t, 6).empty());          // 63 < 64

    NavTrace zeros;
    for (int i = 0; i < 10; ++i) zeros.samples.push_back({i * 1.0, 0, 0, 0});
    CHECK(window(zeros, 2).empty());

    for (const auto& w : window(t, 3)) {
        REQUIRE(w.size() == 8);
        REQUIRE(std::any_of(w.begin(), w.end(), [](double x) { return x != 0; }));
    }
}

TEST_CASE("csv round trip is lossless") {
    const auto t = synth_trace(4, 0.02);
    std::stringstream ss;
    save_trace(t, ss);
    const auto back = load_trace(ss);
    REQUIRE(back.samples.size() == t.samples.size());
    for (std::size_t i = 0; i < t.samples.size(); ++i) {
        CHECK(back.samples[i].t == t.samples[i].t);
        CHECK(back.samples[i].vx == t.samples[i].vx);
        CHECK(back.samples[i].vy == t.samples[i].vy);
        CHECK(back.samples[i].vz == t.samples[i].vz);
    }
}

TEST_CASE("csv parse errors carry line numbers") {
    SECTION("header only") {
        std::stringstream ss("t,vx,vy,vz\n");
        CHECK_THROWS_WITH(load_trace(ss),
                          Catch::Matchers::ContainsSubstring("no samples"));
    }
    SECTION("wrong header") {
        std::stringstream ss("time,vx,vy\n");
        CHECK_THROWS_WITH(load_trace(ss), Catch::Matchers::ContainsSubstring("line 1"));
    }
    SECTION("row with three fields") {
        std::stringstream ss("t,vx,vy,vz\n0.0,1.0,2.0\n");
        CHECK_THROWS_WITH(load_trace(ss), Catch::Matchers::ContainsSubstring("line 2"));
    }
    SECTION("non-numeric field") {
        std::stringstream ss("t,vx,vy,vz\n0.0,abc,2.0,3.0\n");
        CHECK_THROWS_WITH(load_trace(ss), Catch::Matchers::ContainsSubstring("line 2"));
    }
    SECTION("non-monotone timestamps") {
        std::stringstream ss("t,vx,vy,vz\n1.0,0,0,0\n0.5,0,0,0\n");
        CHECK_THROWS_WITH(load_trace(ss),
                          Catch::Matchers::ContainsSubstring("strictly increasing"));
    }
}
