#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "drp/wavepacket.hpp"

using namespace drp;

namespace {

// Two-packet setup with the reference envelope/speed parameters and the
// second packet centered at -100.
ErrorModelConfig reference_config() {
    ErrorModelConfig cfg;
    cfg.packet1 = WavePacket{0.0005, 0.0, 1.0, -2.68381};
    cfg.packet2 = WavePacket{0.0005, -100.0, 1.0, -2.51381};
    cfg.c = 1.0;
    cfg.x_min = -1000.0;
    cfg.x_max = 500.0;
    cfg.nx = 15001;
    cfg.t_final = 100.0;
    cfg.nt = 11;
    return cfg;
}

}  // namespace

TEST_CASE("packet evaluation: peak, translation, envelope") {
    const WavePacket p{0.0005, 3.0, 1.0, -2.5};
    CHECK(packet_value(p, 3.0, 0.0) == 1.0);
    // pure translation at speed v
    for (double t : {0.5, 2.0, 10.0})
        for (double x : {-7.0, 0.0, 4.5})
            CHECK(packet_value(p, x, t) ==
                  doctest::Approx(packet_value(p, x - p.v * t, 0.0)).epsilon(1e-15));
    // envelope bound
    for (double x : {-100.0, -20.0, 40.0})
        CHECK(std::fabs(packet_value(p, x, 0.0)) <=
              std::exp(-p.alpha * (x - p.x0) * (x - p.x0)) + 1e-300);
    CHECK(p.length() == doctest::Approx(1.0 / std::sqrt(0.0005)).epsilon(1e-15));
}

TEST_CASE("error field vanishes at t = 0 and under exact advection") {
    ErrorModelConfig cfg = reference_config();
    for (double x : {-150.0, -100.0, -31.0, 0.0, 52.0})
        CHECK(error_field(cfg, x, 0.0) == 0.0);
    // both packets advected at exactly c: no dispersive error at any time
    cfg.packet1.v = cfg.c;
    cfg.packet2.v = cfg.c;
    for (double t : {1.0, 10.0, 50.0})
        for (double x : {-120.0, -60.0, 5.0}) CHECK(error_field(cfg, x, t) == 0.0);
}

TEST_CASE("error field probes, frozen by direct evaluation") {
    const ErrorModelConfig cfg = reference_config();
    CHECK(error_field(cfg, -50.0, 30.0) == doctest::Approx(0.060198177329089594).epsilon(1e-12));
    CHECK(error_field(cfg, 10.0, 5.0) == doctest::Approx(0.38796582335396712).epsilon(1e-12));
}

TEST_CASE("linf history starts at zero and matches pointwise evaluation") {
    const ErrorModelConfig cfg = reference_config();
    const ErrorHistory hist = linf_history(cfg);
    REQUIRE(static_cast<int>(hist.times.size()) == cfg.nt);
    CHECK(hist.times.front() == 0.0);
    CHECK(hist.linf.front() == 0.0);
    CHECK(hist.times.back() == doctest::Approx(cfg.t_final).epsilon(1e-15));
    // recompute one sample by brute force over the grid
    const int it = 5;
    double brute = 0.0;
    for (int i = 0; i < cfg.nx; ++i)
        brute = std::max(brute, error_field(cfg, cfg.x_min + i * cfg.dx(), hist.times[it]));
    CHECK(hist.linf[it] == doctest::Approx(brute).epsilon(1e-13));
}

TEST_CASE("linf history refuses domains the packets can leave") {
    ErrorModelConfig cfg = reference_config();
    cfg.x_min = -200.0;
    cfg.x_max = 100.0;
    cfg.nx = 3001;
    CHECK_THROWS_AS((void)linf_history(cfg), std::invalid_argument);
}

TEST_CASE("first-order lifetime law is exact") {
    const double l = 1.0 / std::sqrt(0.0005);
    const LifetimeEstimate est = caustic_lifetime(l, l, -2.68381, -2.51381);
    CHECK(est.t_star == doctest::Approx((l + l) / 0.17).epsilon(1e-13));
    CHECK(est.t_star == doctest::Approx(526.13364).epsilon(1e-6));
    CHECK_THROWS_AS((void)caustic_lifetime(1.0, 1.0, -2.5, -2.5), std::domain_error);
}

TEST_CASE("second-order lifetime quadruples when delta_k is halved") {
    const LifetimeEstimate coarse = lifetime_second_order(10.0, 12.0, 0.2, 0.7);
    const LifetimeEstimate fine = lifetime_second_order(10.0, 12.0, 0.1, 0.7);
    CHECK(fine.t_star == 4.0 * coarse.t_star);
    CHECK(coarse.t_star == doctest::Approx((10.0 + 12.0) / (2.0 * 0.04 * 0.7)).epsilon(1e-15));
    CHECK_THROWS_AS((void)lifetime_second_order(1.0, 1.0, 0.1, 0.0), std::domain_error);
}

TEST_CASE("residual energy grid is half the squared error field") {
    ErrorModelConfig cfg = reference_config();
    cfg.nx = 401;
    cfg.x_min = -400.0;
    cfg.x_max = -100.0;
    cfg.t_final = 40.0;
    cfg.nt = 5;
    const FieldGrid grid = residual_energy_grid(cfg);
    REQUIRE(static_cast<int>(grid.x.size()) == cfg.nx);
    REQUIRE(static_cast<int>(grid.t.size()) == cfg.nt);
    for (int ix = 0; ix < cfg.nx; ++ix) CHECK(grid.at(0, ix) == 0.0);
    for (int it = 0; it < cfg.nt; ++it) {
        for (int ix = 0; ix < cfg.nx; ix += 37) {
            const double e = error_field(cfg, grid.x[ix], grid.t[it]);
            CHECK(grid.at(it, ix) == doctest::Approx(0.5 * e * e).epsilon(1e-13));
        }
    }
}

TEST_CASE("configuration validation") {
    ErrorModelConfig cfg = reference_config();
    cfg.packet1.alpha = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = reference_config();
    cfg.x_max = cfg.x_min;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = reference_config();
    cfg.nt = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
