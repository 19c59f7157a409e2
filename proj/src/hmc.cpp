#include "lflow/hmc.hpp"

#include <cmath>
#include <string>

#include "lflow/errors.hpp"

namespace lflow {

void HmcParams::validate() const {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw ConfigError("step size must be positive");
    if (n_leapfrog < 1) throw ConfigError("n_leapfrog must be >= 1");
    if (n_traj < 0) throw ConfigError("n_traj must be >= 0");
}

Tensor sample_momentum(const LatticeGeometry& geom, Rng& rng) {
    Tensor v({2, geom.lx, geom.ly});
    rng.fill_normal({v.data(), static_cast<std::size_t>(v.size())});
    return v;
}

namespace {

void check_force(const Tensor& f, int step) {
    if (!f.all_finite())
        throw NumericError("leapfrog: non-finite force at step " + std::to_string(step));
}

double kinetic_energy(const Tensor& v) {
    double acc = 0.0;
    for (int i = 0; i < v.size(); ++i) acc += v[i] * v[i];
    return 0.5 * acc;
}

} // namespace

std::pair<Tensor, Tensor> leapfrog(const Tensor& x0, const Tensor& v0, double eps, int n_steps,
                                   const ForceFn& force) {
    Tensor x = x0, v = v0;
    if (n_steps < 1) throw DomainError("leapfrog: n_steps must be >= 1");
    const int n = x.size();
    Tensor f = force(x);
    check_force(f, 0);
    const double half = 0.5 * eps;
    for (int i = 0; i < n; ++i) v[i] -= half * f[i];
    for (int step = 0; step < n_steps; ++step) {
        for (int i = 0; i < n; ++i) x[i] += eps * v[i];
        f = force(x);
        check_force(f, step + 1);
        const double kick = (step + 1 == n_steps) ? half : eps;
        for (int i = 0; i < n; ++i) v[i] -= kick * f[i];
    }
    return {std::move(x), std::move(v)};
}

bool metropolis_test(double delta_h, Rng& rng, bool* nan_flag) {
    const double u = rng.uniform(); // always consume the draw
    if (std::isnan(delta_h)) {
        if (nan_flag) *nan_flag = true;
        return false;
    }
    return u < std::exp(-delta_h);
}

TrajectoryResult hmc_trajectory(const Tensor& state, const LatticeGeometry& geom,
                                const ChainTarget& target, double eps, int n_leapfrog, Rng& rng) {
    Tensor v = sample_momentum(geom, rng);
    const double h0 = target.action(state) + kinetic_energy(v);
    auto [xp, vp] = leapfrog(state, v, eps, n_leapfrog, target.force);
    const double h1 = target.action(xp) + kinetic_energy(vp);

    TrajectoryResult res;
    res.delta_h = h1 - h0;
    res.accepted = metropolis_test(res.delta_h, rng);
    res.end_state = res.accepted ? xp : state;
    res.proposed = std::move(xp);
    return res;
}

Tensor run_chain_driver(Tensor state, const LatticeGeometry& geom, const ChainTarget& target,
                        const HmcParams& params, const RecordSink& sink, int chain_id) {
    params.validate();
    Rng rng(params.seed, static_cast<std::uint64_t>(chain_id));
    for (long t = 0; t < params.n_traj; ++t) {
        TrajectoryResult res =
            hmc_trajectory(state, geom, target, params.eps, params.n_leapfrog, rng);
        state = std::move(res.end_state);
        if (sink) {
            ChainRecord rec;
            rec.traj = t;
            rec.delta_h = res.delta_h;
            rec.accepted = res.accepted;
            rec.chain_id = chain_id;
            target.measure(state, rec);
            sink(rec);
        }
    }
    return state;
}

GaugeConfig run_chain(const GaugeConfig& start, const Coupling& coupling, const HmcParams& params,
                      const RecordSink& sink, int chain_id) {
    const LatticeGeometry geom = start.geom;
    ChainTarget target;
    target.action = [&](const Tensor& x) {
        return wilson_action(GaugeConfig(geom, x), coupling);
    };
    target.force = [&](const Tensor& x) {
        Tensor out({2, geom.lx, geom.ly});
        action_gradient_into(geom, coupling.beta, x.data(), out.data());
        return out;
    };
    target.measure = [&](const Tensor& x, ChainRecord& rec) {
        GaugeConfig cfg(geom, x);
        rec.action = wilson_action(cfg, coupling);
        rec.avg_plaq = average_plaquette(cfg);
        rec.charge = topological_charge(cfg);
    };
    Tensor final_state =
        run_chain_driver(start.angles, geom, target, params, sink, chain_id);
    return GaugeConfig(geom, std::move(final_state));
}

} // namespace lflow
