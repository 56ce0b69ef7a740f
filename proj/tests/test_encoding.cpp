#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qgan/encoding.hpp"

using qgan::DataVector;
using qgan::StateVector;
using qgan::amplitude_encode;
using qgan::normalize;
using Catch::Matchers::WithinAbs;

TEST_CASE("normalize examples") {
    const auto d = normalize({3, 4});
    CHECK_THAT(d.mu, WithinAbs(5.0, 1e-12));
    const auto v = d.normalized();
    CHECK_THAT(v[0], WithinAbs(0.6, 1e-12));
    CHECK_THAT(v[1], WithinAbs(0.8, 1e-12));

    CHECK_THROWS_AS(normalize({0, 0, 0}), qgan::degenerate_input_error);

    const auto u = normalize({-1, 0, 0, 0});
    CHECK(u.mu == 1.0);
    CHECK(u.normalized() == std::vector<double>{-1, 0, 0, 0});
}

TEST_CASE("amplitude_encode examples") {
    const auto s = amplitude_encode(normalize({3, 4}), 1);
    CHECK_THAT(s.amp(0).real(), WithinAbs(0.6, 1e-12));
    CHECK_THAT(s.amp(1).real(), WithinAbs(0.8, 1e-12));

    const auto padded = amplitude_encode(normalize({2}), 2);
    CHECK(padded.amp(0) == qgan::cplx{1, 0});
    CHECK(padded.amp(1) == qgan::cplx{0, 0});
    CHECK(padded.amp(2) == qgan::cplx{0, 0});
    CHECK(padded.amp(3) == qgan::cplx{0, 0});

    CHECK_THROWS_AS(amplitude_encode(normalize({1, 2, 3, 4, 5}), 2),
                    qgan::capacity_error);
}

TEST_CASE("round trip: decode times mu recovers the input") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> d(-10, 10);
    std::uniform_int_distribution<int> nq(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = nq(rng);
        std::uniform_int_distribution<int> len(1, 1 << n);
        std::vector<double> x(len(rng));
        for (auto& v : x) v = d(rng);
        if (std::all_of(x.begin(), x.end(), [](double v) { return v == 0; })) continue;

        const auto data = normalize(x);
        const auto state = amplitude_encode(data, n);
        REQUIRE_THAT(state.norm(), WithinAbs(1.0, 1e-10));
        for (std::size_t i = 0; i < x.size(); ++i)
            REQUIRE_THAT(state.amp(i).real() * data.mu, WithinAbs(x[i], 1e-10));
    }
}

TEST_CASE("scale covariance of normalize") {
    std::mt19937_64 rng(100);
    std::uniform_real_distribution<double> d(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> x{d(rng), d(rng), d(rng)};
        if (x[0] == 0 && x[1] == 0 && x[2] == 0) continue;
        double c = d(rng);
        if (c == 0) c = 1.0;
        std::vector<double> cx{c * x[0], c * x[1], c * x[2]};
        const auto v = normalize(x).normalized();
        const auto cv = normalize(cx).normalized();
        const double sign = c > 0 ? 1.0 : -1.0;
        for (int i = 0; i < 3; ++i)
            REQUIRE_THAT(cv[i], WithinAbs(sign * v[i], 1e-12));
    }
}
