#include <doctest.h>

#include <cmath>
#include <numbers>

#include "revival/analysis.hpp"

using namespace revival;

namespace {
const ModelParams kReference{1.0, 1.0, 1.0, 100.0};
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("predicted revival times") {
    CHECK(predict_revival_time(InitialState::fock(10), kReference) == doctest::Approx(2.0 * kPi));
    CHECK(predict_revival_time(InitialState::coherent(1.0), kReference) ==
          doctest::Approx(4.0 * kPi));
    CHECK(predict_revival_time(InitialState::photon_added(1.0, 5), kReference) ==
          doctest::Approx(4.0 * kPi));
    const ModelParams gamma2{1.0, 1.0, 2.0, 100.0};
    CHECK(predict_revival_time(InitialState::fock(3), gamma2) == doctest::Approx(kPi));
    CHECK_THROWS_AS(predict_revival_time(InitialState::fock(3), ModelParams{1.0, 1.0, 0.0, 5.0}),
                    std::invalid_argument);
}

TEST_CASE("overlap fidelity scans") {
    SUBCASE("an eigenstate keeps fidelity 1 at any window") {
        const auto table = build_table(kReference, 0); // vacuum is the N = 0 eigenstate
        const auto amps = field_amplitudes(InitialState::fock(0), 1e-12);
        const auto c0 = project(amps, table);
        const auto rep = overlap_fidelity(c0, table, 3.3, 0.2, 101);
        CHECK(rep.fidelity == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rep.window_lo <= rep.t_peak);
        CHECK(rep.t_peak <= rep.window_hi);
    }

    SUBCASE("rotation limit is exactly periodic with period pi/g") {
        const ModelParams rot{1.0, 1.0, 0.0, 2.0};
        const int N = 3;
        const auto amps = field_amplitudes(InitialState::fock(N), 1e-12);
        const auto table = build_table(rot, N);
        const auto c0 = project(amps, table);
        const double period = kPi / rot.g;
        const auto rep = overlap_fidelity(c0, table, period, 0.2, 301);
        // peak located to 1e-4/g in time, so the fidelity sits within
        // O(N g^2 dt^2) of the exact maximum
        CHECK(rep.fidelity == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(rep.t_peak == doctest::Approx(period).epsilon(1e-3));
    }

    SUBCASE("fidelity is invariant under a global phase of the initial state") {
        const auto amps = field_amplitudes(InitialState::coherent(1.0), 1e-12);
        const auto table = build_table(kReference, amps.n_max);
        auto c0 = project(amps, table);
        const auto rep = overlap_fidelity(c0, table, 4.0 * kPi, 0.05, 501);
        const cplx phase = std::polar(1.0, 1.234);
        for (auto& blk : c0.c)
            for (auto& v : blk) v *= phase;
        const auto rep2 = overlap_fidelity(c0, table, 4.0 * kPi, 0.05, 501);
        CHECK(rep.fidelity == doctest::Approx(rep2.fidelity).epsilon(1e-12));
        CHECK(rep.t_peak == doctest::Approx(rep2.t_peak).epsilon(1e-12));
    }

    SUBCASE("argument validation") {
        const auto table = build_table(kReference, 0);
        const auto c0 = project(field_amplitudes(InitialState::fock(0), 1e-12), table);
        CHECK_THROWS_AS(overlap_fidelity(c0, table, 1.0, 0.0, 101), std::invalid_argument);
        CHECK_THROWS_AS(overlap_fidelity(c0, table, 1.0, 0.7, 101), std::invalid_argument);
        CHECK_THROWS_AS(overlap_fidelity(c0, table, 1.0, 0.2, 10), std::invalid_argument);
        CHECK_THROWS_AS(overlap_fidelity(c0, table, -1.0, 0.2, 101), std::invalid_argument);
    }
}

TEST_CASE("fidelity vs g: sanity on a small grid") {
    FidelityScanOptions opt;
    opt.grid = 2001; // light scan for the unit suite
    const std::vector<double> gs{25.0, 100.0};
    const auto pts = fidelity_vs_g(InitialState::coherent(1.0), 1.0, gs, opt);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].first == 25.0);
    for (const auto& [g, f] : pts) {
        CHECK(f >= 0.0);
        CHECK(f <= 1.0 + 1e-12);
    }
    CHECK(pts[1].second >= pts[0].second - 0.02); // stronger coupling revives better

    CHECK_THROWS_AS(fidelity_vs_g(InitialState::coherent(1.0), 1.0, std::vector<double>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        fidelity_vs_g(InitialState::coherent(1.0), 1.0, std::vector<double>{50.0, 25.0}),
        std::invalid_argument);
}

TEST_CASE("entropy dip reports") {
    SUBCASE("synthetic dip at the revival time") {
        std::vector<TimePoint> series;
        const double t_rev = 5.0;
        for (int i = 0; i <= 1000; ++i) {
            const double t = 6.0 * i / 1000.0;
            const double v = 1.0 - std::exp(-std::pow((t - t_rev) / 0.05, 2));
            series.push_back({t, v});
        }
        const std::vector<double> fractions{1.0};
        const auto dips = entropy_dips(series, t_rev, fractions);
        REQUIRE(dips.size() == 1);
        CHECK(dips[0].t_min == doctest::Approx(5.0).epsilon(1e-2));
        CHECK(dips[0].entropy_min <= 0.01);
        CHECK(dips[0].baseline == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(dips[0].entropy_min <= dips[0].baseline);
    }

    SUBCASE("all-zero series (g = 0) reports zero min and zero baseline") {
        std::vector<TimePoint> series;
        for (int i = 0; i <= 100; ++i) series.push_back({0.06 * i, 0.0});
        const std::vector<double> fractions{1.0};
        const auto dips = entropy_dips(series, 5.0, fractions);
        CHECK(dips[0].entropy_min == 0.0);
        CHECK(dips[0].baseline == 0.0);
    }

    SUBCASE("window outside the series") {
        std::vector<TimePoint> series{{0.0, 0.1}, {1.0, 0.2}};
        const std::vector<double> fractions{1.0};
        CHECK_THROWS_AS(entropy_dips(series, 5.0, fractions), std::invalid_argument);
    }
}

TEST_CASE("squeezing intervals") {
    SUBCASE("constant at the threshold never squeezes") {
        std::vector<TimePoint> series;
        for (int i = 0; i < 50; ++i) series.push_back({0.1 * i, 0.5});
        CHECK(squeezing_intervals(series, 0.5).empty());
    }

    SUBCASE("two dips become two intervals") {
        std::vector<TimePoint> series;
        for (int i = 0; i <= 100; ++i) {
            const double t = 0.1 * i;
            double v = 0.6;
            if (t >= 2.0 && t <= 3.0) v = 0.4;
            if (t >= 7.0 && t <= 7.5) v = 0.45;
            series.push_back({t, v});
        }
        const auto intervals = squeezing_intervals(series, 0.5);
        REQUIRE(intervals.size() == 2);
        CHECK(intervals[0].first == doctest::Approx(2.0));
        CHECK(intervals[0].second == doctest::Approx(3.0));
        CHECK(intervals[1].first == doctest::Approx(7.0));
        CHECK(intervals[1].second == doctest::Approx(7.5));
    }

    SUBCASE("unsorted series is rejected") {
        std::vector<TimePoint> series{{1.0, 0.4}, {0.5, 0.4}};
        CHECK_THROWS_AS(squeezing_intervals(series, 0.5), std::invalid_argument);
    }
}

TEST_CASE("xi squeezing near half the revival time: coherent yes, photon-added no") {
    const auto delta_xi_series = [](const InitialState& initial) {
        const auto amps = field_amplitudes(initial, 1e-12);
        const auto table = build_table(kReference, amps.n_max);
        const auto c0 = project(amps, table);
        std::vector<double> times(401);
        for (std::size_t i = 0; i < times.size(); ++i)
            times[i] = 2.0 * kPi - 0.3 + 0.6 * static_cast<double>(i) / 400.0;
        const auto var = moment_timeseries(c0, table, times, {QuadratureKind::Xi, 2}, true);
        std::vector<TimePoint> series(times.size());
        for (std::size_t i = 0; i < times.size(); ++i)
            series[i] = {times[i], std::sqrt(std::max(var.values[i], 0.0))};
        return series;
    };

    const auto cs = delta_xi_series(InitialState::coherent(1.0));
    CHECK_FALSE(squeezing_intervals(cs, 0.5).empty());

    const auto pacs = delta_xi_series(InitialState::photon_added(1.0, 1));
    CHECK(squeezing_intervals(pacs, 0.5).empty());
}
