#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace drp {

// Gaussian-modulated cosine packet advected at speed v.
struct WavePacket {
    double alpha = 0.0;  // envelope decay, 1/length^2
    double x0 = 0.0;     // initial center
    double k = 0.0;      // carrier wavenumber
    double v = 0.0;      // advection speed of this packet

    void validate() const {
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw std::invalid_argument("WavePacket: alpha must be positive");
        if (!std::isfinite(x0) || !std::isfinite(k) || !std::isfinite(v))
            throw std::invalid_argument("WavePacket: non-finite field");
    }

    // Gaussian e-folding scale, used as the packet length in lifetime estimates.
    double length() const { return 1.0 / std::sqrt(alpha); }
};

struct ErrorModelConfig {
    WavePacket packet1;
    WavePacket packet2;
    double c = 1.0;  // exact advection speed
    double x_min = 0.0;
    double x_max = 0.0;
    int nx = 0;
    double t_final = 0.0;
    int nt = 0;

    void validate() const {
        packet1.validate();
        packet2.validate();
        if (!std::isfinite(c)) throw std::invalid_argument("ErrorModelConfig: non-finite c");
        if (nx < 2) throw std::invalid_argument("ErrorModelConfig: nx must be >= 2");
        if (nt < 2) throw std::invalid_argument("ErrorModelConfig: nt must be >= 2");
        if (!(x_max > x_min)) throw std::invalid_argument("ErrorModelConfig: x_max must exceed x_min");
        if (!(t_final > 0.0)) throw std::invalid_argument("ErrorModelConfig: t_final must be positive");
    }

    double dx() const { return (x_max - x_min) / (nx - 1); }
};

struct ErrorHistory {
    std::vector<double> times;
    std::vector<double> linf;
};

struct FieldGrid {
    std::vector<double> x;       // nx
    std::vector<double> t;       // nt
    std::vector<double> values;  // nt * nx, row-major in t

    double at(int it, int ix) const { return values[static_cast<std::size_t>(it) * x.size() + ix]; }
};

struct LifetimeEstimate {
    double l1 = 0.0;
    double l2 = 0.0;
    double v1 = 0.0;
    double v2 = 0.0;
    double t_star = 0.0;
    double delta_k = 0.0;  // set by the second-order form only
    double d2vg = 0.0;     // |d^2 V_g / dk^2| at the caustic, second-order form only
};

// u(x, t) = exp(-alpha (x - x0 - v t)^2) cos(k (x - x0 - v t))
double packet_value(const WavePacket& p, double x, double t);

// Dispersive error of the two-packet problem:
// |u1(c) - u1(V1) + u2(c) - u2(V2)| with all four terms Gaussian-cosine packets.
double error_field(const ErrorModelConfig& cfg, double x, double t);

// L_inf over the x grid at nt uniformly spaced sample times. Throws if any
// packet support (6 e-folding lengths) can leave the domain before t_final.
ErrorHistory linf_history(const ErrorModelConfig& cfg);

// t* = (l1 + l2) / |v1 - v2|; throws for v1 == v2.
LifetimeEstimate caustic_lifetime(double l1, double l2, double v1, double v2);

// t* = (l1 + l2) / (2 delta_k^2 d2vg); throws for d2vg == 0.
LifetimeEstimate lifetime_second_order(double l1, double l2, double delta_k, double d2vg);

// Pointwise residual kinetic energy (1/2) E^2 on the configured grid.
FieldGrid residual_energy_grid(const ErrorModelConfig& cfg);

}  // namespace drp
