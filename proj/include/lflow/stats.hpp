#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lflow {

/// Unnormalized importance weights in log form, log w_i = log p~(x_i) - log q(x_i).
struct WeightSet {
    std::vector<double> log_weights;
};

/// One scalar observable per trajectory/sample.
struct Series {
    std::vector<double> values;
    std::string label;
};

/// Normalized effective sample size (sum w)^2 / (N sum w^2) in (0, 1],
/// computed after subtracting the max log weight.
double effective_sample_size(const WeightSet& ws);

/// tau_int = 0.5 + sum_{t=1}^{W} rho(t) with the self-consistent window
/// W = min { W : W >= 5 * tau_int(W) }. Throws FrozenObservableError on a
/// constant series.
double integrated_autocorrelation(const Series& s);

/// Fraction of consecutive pairs with Q_{i+1} != Q_i; entries must be integers.
double tunneling_rate(const Series& q_series);

/// Std deviation of the mean over seeded bootstrap resamples.
double bootstrap_error(const Series& s, int n_resample, std::uint64_t seed);

double series_mean(const Series& s);

} // namespace lflow
