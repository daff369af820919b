#include "drp/wavepacket.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "drp/kernels.hpp"

namespace drp {

double packet_value(const WavePacket& p, double x, double t) {
    const double s = x - p.x0 - p.v * t;
    return std::exp(-p.alpha * s * s) * std::cos(p.k * s);
}

namespace {

// Beyond this envelope exponent a term is below 1e-20 and is dropped by the
// windowed evaluators.
constexpr double kSupportExponent = 46.0;

struct Term {
    const WavePacket* packet;
    double speed;  // advection speed used for this copy
    double sign;
};

double term_value(const Term& term, double x, double t) {
    const WavePacket& p = *term.packet;
    const double s = x - p.x0 - term.speed * t;
    const double e = p.alpha * s * s;
    if (e > kSupportExponent) return 0.0;
    return term.sign * std::exp(-e) * std::cos(p.k * s);
}

std::array<Term, 4> error_terms(const ErrorModelConfig& cfg) {
    return {Term{&cfg.packet1, cfg.c, 1.0}, Term{&cfg.packet1, cfg.packet1.v, -1.0},
            Term{&cfg.packet2, cfg.c, 1.0}, Term{&cfg.packet2, cfg.packet2.v, -1.0}};
}

double error_field_windowed(const std::array<Term, 4>& terms, double x, double t) {
    double e = 0.0;
    for (const Term& term : terms) e += term_value(term, x, t);
    return std::fabs(e);
}

// Merged index windows covering the support of all four terms at time t.
std::vector<std::pair<long, long>> support_windows(const ErrorModelConfig& cfg,
                                                   const std::array<Term, 4>& terms, double t) {
    const double dx = cfg.dx();
    std::vector<std::pair<long, long>> spans;
    for (const Term& term : terms) {
        const double radius = std::sqrt(kSupportExponent / term.packet->alpha);
        const double center = term.packet->x0 + term.speed * t;
        long lo = static_cast<long>(std::floor((center - radius - cfg.x_min) / dx));
        long hi = static_cast<long>(std::ceil((center + radius - cfg.x_min) / dx));
        lo = std::max(lo, 0L);
        hi = std::min(hi, static_cast<long>(cfg.nx) - 1);
        if (lo <= hi) spans.emplace_back(lo, hi);
    }
    std::sort(spans.begin(), spans.end());
    std::vector<std::pair<long, long>> merged;
    for (const auto& s : spans) {
        if (!merged.empty() && s.first <= merged.back().second + 1)
            merged.back().second = std::max(merged.back().second, s.second);
        else
            merged.push_back(s);
    }
    return merged;
}

void check_margins(const ErrorModelConfig& cfg) {
    const std::array<Term, 4> terms = error_terms(cfg);
    for (const Term& term : terms) {
        const double margin = 6.0 * term.packet->length();
        const double c0 = term.packet->x0;
        const double c1 = term.packet->x0 + term.speed * cfg.t_final;
        const double lo = std::min(c0, c1) - margin;
        const double hi = std::max(c0, c1) + margin;
        if (lo < cfg.x_min || hi > cfg.x_max)
            throw std::invalid_argument(
                "linf_history: domain too small, packet support reaches the boundary before "
                "t_final");
    }
}

}  // namespace

double error_field(const ErrorModelConfig& cfg, double x, double t) {
    cfg.validate();
    // exact advection of both packets at speed c, dispersive advection at V1/V2
    WavePacket p1c = cfg.packet1;
    p1c.v = cfg.c;
    WavePacket p2c = cfg.packet2;
    p2c.v = cfg.c;
    const double e = packet_value(p1c, x, t) - packet_value(cfg.packet1, x, t) +
                     packet_value(p2c, x, t) - packet_value(cfg.packet2, x, t);
    return std::fabs(e);
}

ErrorHistory linf_history(const ErrorModelConfig& cfg) {
    cfg.validate();
    check_margins(cfg);
    const std::array<Term, 4> terms = error_terms(cfg);
    const double dx = cfg.dx();

    ErrorHistory history;
    history.times.resize(cfg.nt);
    history.linf.resize(cfg.nt);
    std::vector<double> buffer;
    for (int j = 0; j < cfg.nt; ++j) {
        const double t = cfg.t_final * j / (cfg.nt - 1);
        history.times[j] = t;
        double best = 0.0;
        for (const auto& [lo, hi] : support_windows(cfg, terms, t)) {
            buffer.resize(static_cast<std::size_t>(hi - lo + 1));
            for (long i = lo; i <= hi; ++i)
                buffer[static_cast<std::size_t>(i - lo)] =
                    error_field_windowed(terms, cfg.x_min + i * dx, t);
            best = std::max(best, kernels::max_abs(buffer.data(), buffer.size()));
        }
        history.linf[j] = best;
    }
    return history;
}

LifetimeEstimate caustic_lifetime(double l1, double l2, double v1, double v2) {
    if (!(l1 > 0.0) || !(l2 > 0.0))
        throw std::invalid_argument("caustic_lifetime: packet lengths must be positive");
    if (v1 == v2) throw std::domain_error("caustic_lifetime: v1 == v2 gives an infinite lifetime");
    LifetimeEstimate est;
    est.l1 = l1;
    est.l2 = l2;
    est.v1 = v1;
    est.v2 = v2;
    est.t_star = (l1 + l2) / std::fabs(v1 - v2);
    return est;
}

LifetimeEstimate lifetime_second_order(double l1, double l2, double delta_k, double d2vg) {
    if (!(l1 > 0.0) || !(l2 > 0.0))
        throw std::invalid_argument("lifetime_second_order: packet lengths must be positive");
    if (!(delta_k > 0.0)) throw std::invalid_argument("lifetime_second_order: delta_k must be positive");
    if (d2vg == 0.0)
        throw std::domain_error("lifetime_second_order: degenerate caustic, d2vg = 0");
    if (!(d2vg > 0.0)) throw std::invalid_argument("lifetime_second_order: d2vg must be positive");
    LifetimeEstimate est;
    est.l1 = l1;
    est.l2 = l2;
    est.delta_k = delta_k;
    est.d2vg = d2vg;
    est.t_star = (l1 + l2) / (2.0 * delta_k * delta_k * d2vg);
    return est;
}

FieldGrid residual_energy_grid(const ErrorModelConfig& cfg) {
    cfg.validate();
    const std::array<Term, 4> terms = error_terms(cfg);
    const double dx = cfg.dx();

    FieldGrid grid;
    grid.x.resize(cfg.nx);
    for (int i = 0; i < cfg.nx; ++i) grid.x[i] = cfg.x_min + i * dx;
    grid.t.resize(cfg.nt);
    grid.values.assign(static_cast<std::size_t>(cfg.nt) * cfg.nx, 0.0);

    std::vector<double> row(cfg.nx);
    for (int j = 0; j < cfg.nt; ++j) {
        const double t = cfg.t_final * j / (cfg.nt - 1);
        grid.t[j] = t;
        std::fill(row.begin(), row.end(), 0.0);
        for (const auto& [lo, hi] : support_windows(cfg, terms, t))
            for (long i = lo; i <= hi; ++i)
                row[static_cast<std::size_t>(i)] = error_field_windowed(terms, grid.x[i], t);
        kernels::half_square(grid.values.data() + static_cast<std::size_t>(j) * cfg.nx, row.data(),
                             row.size());
    }
    return grid;
}

}  // namespace drp
