#include "lflow/lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lflow/errors.hpp"

namespace lflow {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

LatticeGeometry::LatticeGeometry(int lx_, int ly_) : lx(lx_), ly(ly_) {
    if (lx < 2 || ly < 2)
        throw DomainError("lattice extents must be >= 2, got " + std::to_string(lx) + "x" +
                          std::to_string(ly));
}

Coupling::Coupling(double b) : beta(b) {
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("beta must be positive and finite");
}

GaugeConfig::GaugeConfig(const LatticeGeometry& g, Tensor a) : geom(g), angles(std::move(a)) {
    if (angles.shape() != std::vector<int>{2, g.lx, g.ly})
        throw DomainError("gauge config shape " + angles.shape_str() + " does not match lattice");
}

double wrap_angle(double theta) {
    if (!std::isfinite(theta)) throw DomainError("wrap_angle: non-finite angle");
    double r = std::remainder(theta, kTwoPi);
    if (r <= -std::numbers::pi) r = std::numbers::pi;
    return r;
}

void plaquette_field_into(const LatticeGeometry& g, const double* links, double* out) {
    const int lx = g.lx, ly = g.ly;
    const double* x0 = links;
    const double* x1 = links + lx * ly;
    for (int x = 0; x < lx; ++x) {
        const int xp = (x + 1 == lx) ? 0 : x + 1;
        for (int y = 0; y < ly; ++y) {
            const int yp = (y + 1 == ly) ? 0 : y + 1;
            out[x * ly + y] =
                ((x0[x * ly + y] + x1[xp * ly + y]) - x0[x * ly + yp]) - x1[x * ly + y];
        }
    }
}

Tensor plaquette_field(const GaugeConfig& cfg) {
    Tensor out({cfg.geom.lx, cfg.geom.ly});
    plaquette_field_into(cfg.geom, cfg.angles.data(), out.data());
    return out;
}

double wilson_action(const GaugeConfig& cfg, const Coupling& coupling) {
    Tensor p = plaquette_field(cfg);
    double acc = 0.0;
    for (int i = 0; i < p.size(); ++i) acc += 1.0 - std::cos(p[i]);
    return coupling.beta * acc;
}

void action_gradient_into(const LatticeGeometry& g, double beta, const double* links,
                          double* out) {
    const int lx = g.lx, ly = g.ly;
    std::vector<double> gp(static_cast<std::size_t>(g.n_plaq()));
    plaquette_field_into(g, links, gp.data());
    for (double& v : gp) v = beta * std::sin(v);
    // each link sits in two plaquettes, once with each orientation
    double* g0 = out;
    double* g1 = out + lx * ly;
    for (int x = 0; x < lx; ++x) {
        const int xm = (x == 0) ? lx - 1 : x - 1;
        for (int y = 0; y < ly; ++y) {
            const int ym = (y == 0) ? ly - 1 : y - 1;
            g0[x * ly + y] = gp[x * ly + y] - gp[x * ly + ym];
            g1[x * ly + y] = gp[xm * ly + y] - gp[x * ly + y];
        }
    }
}

Tensor action_gradient(const GaugeConfig& cfg, const Coupling& coupling) {
    Tensor out({2, cfg.geom.lx, cfg.geom.ly});
    action_gradient_into(cfg.geom, coupling.beta, cfg.angles.data(), out.data());
    return out;
}

long topological_charge(const GaugeConfig& cfg) {
    Tensor p = plaquette_field(cfg);
    double acc = 0.0;
    for (int i = 0; i < p.size(); ++i) acc += wrap_angle(p[i]);
    const double q = acc / kTwoPi;
    const double rounded = std::round(q);
    if (std::abs(q - rounded) > 1e-6)
        throw NumericError("topological charge " + std::to_string(q) + " is not an integer");
    return static_cast<long>(rounded);
}

double average_plaquette(const GaugeConfig& cfg) {
    Tensor p = plaquette_field(cfg);
    double acc = 0.0;
    for (int i = 0; i < p.size(); ++i) acc += std::cos(p[i]);
    return acc / p.size();
}

double bessel_i(int n, double x) {
    n = std::abs(n);
    const double h = x / 2.0;
    // leading term h^n / n!
    double term = 1.0;
    for (int k = 1; k <= n; ++k) term *= h / k;
    double sum = term;
    const double h2 = h * h;
    for (int k = 1; k < 4000; ++k) {
        term *= h2 / (static_cast<double>(k) * (k + n));
        sum += term;
        if (term < 1e-17 * sum) return sum;
    }
    throw NumericError("bessel_i series did not converge");
}

double exact_average_plaquette(const Coupling& coupling, const LatticeGeometry& geom) {
    const double beta = coupling.beta;
    const double np = static_cast<double>(geom.n_plaq());
    const double i0 = bessel_i(0, beta);
    double z = 0.0, num = 0.0;
    double prev_i = bessel_i(1, beta); // I_{n-1} as the loop runs; I_{-1} = I_1
    for (int n = 0; n < 100000; ++n) {
        const double in = bessel_i(n, beta);
        const double inp = bessel_i(n + 1, beta);
        const double r = in / i0;
        const double zterm = std::pow(r, np);
        const double nterm = std::pow(r, np - 1.0) * ((prev_i + inp) / 2.0 / i0);
        const double mult = (n == 0) ? 1.0 : 2.0;
        z += mult * zterm;
        num += mult * nterm;
        prev_i = in;
        if (n > 1 && zterm < 1e-16 * z && nterm < 1e-16 * num) {
            return num / z;
        }
    }
    throw NumericError("character expansion did not converge");
}

GaugeConfig instanton_config(const LatticeGeometry& geom, long q) {
    if (2 * std::abs(q) >= static_cast<long>(geom.n_plaq()))
        throw DomainError("instanton charge |q| must be < lx*ly/2");
    GaugeConfig cfg(geom);
    const double flux = kTwoPi * static_cast<double>(q);
    for (int x = 0; x < geom.lx; ++x)
        for (int y = 0; y < geom.ly; ++y)
            cfg.at(1, x, y) = flux * x / geom.n_plaq();
    for (int y = 0; y < geom.ly; ++y)
        cfg.at(0, geom.lx - 1, y) = -flux * y / geom.ly;
    return cfg;
}

GaugeConfig cold_config(const LatticeGeometry& geom) { return GaugeConfig(geom); }

GaugeConfig random_config(const LatticeGeometry& geom, std::uint64_t seed) {
    GaugeConfig cfg(geom);
    Rng rng(seed);
    for (int i = 0; i < cfg.angles.size(); ++i) cfg.angles[i] = rng.uniform_angle();
    return cfg;
}

GaugeConfig gauge_transform(const GaugeConfig& cfg, const Tensor& phi) {
    const LatticeGeometry& g = cfg.geom;
    if (phi.shape() != std::vector<int>{g.lx, g.ly})
        throw DomainError("gauge transform field shape " + phi.shape_str() +
                          " does not match lattice");
    GaugeConfig out = cfg;
    for (int x = 0; x < g.lx; ++x) {
        for (int y = 0; y < g.ly; ++y) {
            out.at(0, x, y) += phi[g.site(x, y)] - phi[g.site(g.wrap_x(x + 1), y)];
            out.at(1, x, y) += phi[g.site(x, y)] - phi[g.site(x, g.wrap_y(y + 1))];
        }
    }
    return out;
}

GaugeConfig canonicalize(const GaugeConfig& cfg) {
    GaugeConfig out = cfg;
    for (int i = 0; i < out.angles.size(); ++i) out.angles[i] = wrap_angle(out.angles[i]);
    return out;
}

} // namespace lflow
