#pragma once

#include <cstdint>

#include "lflow/rng.hpp"
#include "lflow/tensor.hpp"

namespace lflow {

/// Periodic square lattice. Direction 0 is x, direction 1 is y; a plaquette
/// is anchored at its lower-left site:
///   x_P(x, y) = x0(x, y) + x1(x+1, y) - x0(x, y+1) - x1(x, y).
struct LatticeGeometry {
    int lx = 0;
    int ly = 0;

    LatticeGeometry() = default;
    LatticeGeometry(int lx_, int ly_);

    int n_sites() const { return lx * ly; }
    int n_plaq() const { return lx * ly; }
    int n_links() const { return 2 * lx * ly; }

    int wrap_x(int x) const { return (x % lx + lx) % lx; }
    int wrap_y(int y) const { return (y % ly + ly) % ly; }
    int site(int x, int y) const { return x * ly + y; }
    int link(int mu, int x, int y) const { return (mu * lx + x) * ly + y; }

    bool operator==(const LatticeGeometry&) const = default;
};

struct Coupling {
    double beta = 1.0;
    explicit Coupling(double b);
};

/// Link angles x_mu(n), stored direction-major as a [2, lx, ly] tensor.
/// Angles are not kept wrapped; canonicalize() wraps explicitly.
struct GaugeConfig {
    LatticeGeometry geom;
    Tensor angles;

    GaugeConfig() = default;
    explicit GaugeConfig(const LatticeGeometry& g) : geom(g), angles({2, g.lx, g.ly}) {}
    GaugeConfig(const LatticeGeometry& g, Tensor a);

    double& at(int mu, int x, int y) { return angles[geom.link(mu, x, y)]; }
    double at(int mu, int x, int y) const { return angles[geom.link(mu, x, y)]; }
};

/// Reduce an angle to (-pi, pi]; exact for inputs already in range.
double wrap_angle(double theta);

/// Unwrapped plaquette angles x_P as a [lx, ly] tensor. The four-link sum is
/// evaluated in a fixed order shared with the autodiff plaquette op.
Tensor plaquette_field(const GaugeConfig& cfg);

/// In-place variant used by hot paths; out must have n_plaq elements.
void plaquette_field_into(const LatticeGeometry& g, const double* links, double* out);

/// S = beta * sum_P (1 - cos x_P).
double wilson_action(const GaugeConfig& cfg, const Coupling& coupling);

/// dS/dx_mu(n), analytic; matches the tape gradient bitwise.
Tensor action_gradient(const GaugeConfig& cfg, const Coupling& coupling);
void action_gradient_into(const LatticeGeometry& g, double beta, const double* links, double* out);

/// Q = round(sum_P wrap(x_P) / 2pi); the pre-round value must sit on an
/// integer to 1e-6 or an internal consistency error is raised.
long topological_charge(const GaugeConfig& cfg);

/// Mean plaquette cosine, in [-1, 1].
double average_plaquette(const GaugeConfig& cfg);

/// Exact torus expectation of cos x_P via the character expansion
///   Z = sum_n I_n(beta)^NP,  <cos x_P> = sum_n I_n^(NP-1) (I_{n-1}+I_{n+1})/2 / Z,
/// truncated at 1e-16 relative.
double exact_average_plaquette(const Coupling& coupling, const LatticeGeometry& geom);

/// Modified Bessel I_n by power series (exposed for cross-checks).
double bessel_i(int n, double x);

/// Uniform-flux configuration with topological_charge == q; requires |q| < lx*ly/2.
GaugeConfig instanton_config(const LatticeGeometry& geom, long q);

GaugeConfig cold_config(const LatticeGeometry& geom);
GaugeConfig random_config(const LatticeGeometry& geom, std::uint64_t seed);

/// Site rotation phi: x_mu(n) += phi(n) - phi(n + mu_hat). All gauge-invariant
/// observables are unchanged.
GaugeConfig gauge_transform(const GaugeConfig& cfg, const Tensor& phi);

/// All angles wrapped to (-pi, pi].
GaugeConfig canonicalize(const GaugeConfig& cfg);

} // namespace lflow
