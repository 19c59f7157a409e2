#include "lflow/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lflow/errors.hpp"
#include "lflow/rng.hpp"

namespace lflow {

double effective_sample_size(const WeightSet& ws) {
    const auto& lw = ws.log_weights;
    if (lw.empty()) throw DomainError("effective_sample_size: empty weight set");
    double mx = -std::numeric_limits<double>::infinity();
    for (double v : lw) {
        if (std::isnan(v) || v == std::numeric_limits<double>::infinity())
            throw DomainError("effective_sample_size: invalid log weight");
        mx = std::max(mx, v);
    }
    if (!std::isfinite(mx)) throw NumericError("effective_sample_size: all weights are zero");
    double s1 = 0.0, s2 = 0.0;
    for (double v : lw) {
        const double w = std::exp(v - mx); // in [0, 1]
        s1 += w;
        s2 += w * w;
    }
    if (s2 == 0.0) throw NumericError("effective_sample_size: all weights are zero");
    return (s1 * s1) / (static_cast<double>(lw.size()) * s2);
}

double series_mean(const Series& s) {
    if (s.values.empty()) throw DomainError("series is empty");
    double acc = 0.0;
    for (double v : s.values) acc += v;
    return acc / static_cast<double>(s.values.size());
}

double integrated_autocorrelation(const Series& s) {
    const auto& v = s.values;
    const int n = static_cast<int>(v.size());
    if (n < 10) throw DomainError("integrated_autocorrelation: need at least 10 samples");
    const double mean = series_mean(s);
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    var /= n;
    if (var == 0.0)
        throw FrozenObservableError("frozen observable: series '" + s.label +
                                    "' has zero variance");
    auto rho = [&](int t) {
        double c = 0.0;
        for (int i = 0; i + t < n; ++i) c += (v[i] - mean) * (v[i + t] - mean);
        return c / n / var;
    };
    double tau = 0.5;
    const int wmax = n / 2;
    for (int w = 1; w <= wmax; ++w) {
        tau += rho(w);
        if (static_cast<double>(w) >= 5.0 * tau) break;
    }
    return std::max(tau, 0.0);
}

double tunneling_rate(const Series& q_series) {
    const auto& v = q_series.values;
    if (v.size() < 2) throw DomainError("tunneling_rate: need at least 2 samples");
    long prev = 0;
    int changes = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double r = std::round(v[i]);
        if (!std::isfinite(v[i]) || std::abs(v[i] - r) > 1e-6)
            throw DomainError("tunneling_rate: non-integer charge at index " + std::to_string(i));
        const long q = static_cast<long>(r);
        if (i > 0 && q != prev) ++changes;
        prev = q;
    }
    return static_cast<double>(changes) / static_cast<double>(v.size() - 1);
}

double bootstrap_error(const Series& s, int n_resample, std::uint64_t seed) {
    const auto& v = s.values;
    if (v.size() < 2) throw DomainError("bootstrap_error: need at least 2 samples");
    if (n_resample < 2) throw DomainError("bootstrap_error: need at least 2 resamples");
    Rng rng(seed);
    const std::size_t n = v.size();
    std::vector<double> means(static_cast<std::size_t>(n_resample));
    for (auto& m : means) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto j = static_cast<std::size_t>(rng.uniform() * static_cast<double>(n));
            acc += v[j < n ? j : n - 1];
        }
        m = acc / static_cast<double>(n);
    }
    double mean = 0.0;
    for (double m : means) mean += m;
    mean /= n_resample;
    double var = 0.0;
    for (double m : means) var += (m - mean) * (m - mean);
    return std::sqrt(var / (n_resample - 1));
}

} // namespace lflow
