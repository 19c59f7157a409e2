#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "lflow/lattice.hpp"
#include "lflow/rng.hpp"
#include "lflow/tensor.hpp"

namespace lflow {

struct HmcParams {
    double eps = 0.1;
    int n_leapfrog = 10;
    std::uint64_t seed = 0;
    long n_traj = 1;

    void validate() const;
};

/// Per-trajectory observables emitted to the sink. `action`, `avg_plaq` and
/// `charge` are always measured on the physical configuration.
struct ChainRecord {
    long traj = 0;
    double action = 0.0;
    double avg_plaq = 0.0;
    long charge = 0;
    double delta_h = 0.0;
    bool accepted = false;
    int chain_id = 0;
};

using RecordSink = std::function<void(const ChainRecord&)>;

struct TrajectoryResult {
    Tensor proposed;
    double delta_h = 0.0;
    bool accepted = false;
    Tensor end_state;
};

using ForceFn = std::function<Tensor(const Tensor&)>;
using ActionFn = std::function<double(const Tensor&)>;

/// i.i.d. standard normal momentum per link. Fill order is the row-major
/// buffer order of the [2, lx, ly] layout.
Tensor sample_momentum(const LatticeGeometry& geom, Rng& rng);

/// n_steps of half-kick / drift / half-kick with fused interior kicks.
/// force(x) must return dS/dx with the shape of x. Volume preserving and
/// time reversible; throws on a non-finite force, naming the step.
std::pair<Tensor, Tensor> leapfrog(const Tensor& x, const Tensor& v, double eps, int n_steps,
                                   const ForceFn& force);

/// Accept with probability min(1, e^{-delta_h}). Always consumes exactly one
/// uniform draw. NaN rejects and sets *nan_flag if provided.
bool metropolis_test(double delta_h, Rng& rng, bool* nan_flag = nullptr);

/// Target + measurement callbacks for the generic chain driver. Plain HMC
/// measures on the state itself; fthmc pushes the latent state through the
/// flow first.
struct ChainTarget {
    ActionFn action;
    ForceFn force;
    // physical observables of a state: (action, avg_plaq, charge)
    std::function<void(const Tensor&, ChainRecord&)> measure;
};

/// Runs n_traj trajectories. Draw order per trajectory: momenta, then one
/// accept uniform. Returns the final state.
Tensor run_chain_driver(Tensor state, const LatticeGeometry& geom, const ChainTarget& target,
                        const HmcParams& params, const RecordSink& sink, int chain_id = 0);

TrajectoryResult hmc_trajectory(const Tensor& state, const LatticeGeometry& geom,
                                const ChainTarget& target, double eps, int n_leapfrog, Rng& rng);

/// Plain HMC on the Wilson action.
GaugeConfig run_chain(const GaugeConfig& start, const Coupling& coupling, const HmcParams& params,
                      const RecordSink& sink, int chain_id = 0);

} // namespace lflow
