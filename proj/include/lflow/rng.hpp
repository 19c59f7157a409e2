#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>

namespace lflow {

/// Counter-based Philox4x64-10 generator (Salmon et al., matches numpy's
/// Philox bit stream for the same counter/key).
///
/// The key is (seed, stream): distinct streams are statistically independent,
/// which is how chains, epochs and resampling loops get their own substreams.
/// Draw order is part of the reproducibility contract and is documented at
/// each call site (e.g. one trajectory = momentum normals in buffer order,
/// then exactly one accept/reject uniform).
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_{seed, stream}, counter_{0, 0, 0, 0} {}

    /// Independent substream with the same seed.
    Rng fork(std::uint64_t stream) const { return Rng(key_[0], stream); }

    std::uint64_t next_u64() {
        if (pos_ == 4) {
            block_ = philox_block(counter_, key_);
            increment_counter();
            pos_ = 0;
        }
        return block_[pos_++];
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform angle in (-pi, pi].
    double uniform_angle() { return std::numbers::pi - 2.0 * std::numbers::pi * uniform(); }

    /// Standard normal draws via Box-Muller, two uniforms per pair.
    /// An odd-length fill discards the second member of the final pair, so a
    /// fill of n values always consumes 2*ceil(n/2) uniforms.
    void fill_normal(std::span<double> out) {
        for (std::size_t i = 0; i < out.size(); i += 2) {
            const double u1 = uniform();
            const double u2 = uniform();
            const double r = std::sqrt(-2.0 * std::log1p(-u1));
            const double a = 2.0 * std::numbers::pi * u2;
            out[i] = r * std::cos(a);
            if (i + 1 < out.size()) out[i + 1] = r * std::sin(a);
        }
    }

    double normal() {
        double v;
        fill_normal({&v, 1});
        return v;
    }

  private:
    static std::uint64_t mulhi(std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) >> 64);
    }

    static std::array<std::uint64_t, 4> philox_block(std::array<std::uint64_t, 4> x,
                                                     std::array<std::uint64_t, 2> k) {
        constexpr std::uint64_t M0 = 0xD2E7470EE14C6C93ULL;
        constexpr std::uint64_t M1 = 0xCA5A826395121157ULL;
        constexpr std::uint64_t W0 = 0x9E3779B97F4A7C15ULL;
        constexpr std::uint64_t W1 = 0xBB67AE8584CAA73BULL;
        for (int round = 0;; ++round) {
            const std::uint64_t hi0 = mulhi(M0, x[0]), lo0 = M0 * x[0];
            const std::uint64_t hi1 = mulhi(M1, x[2]), lo1 = M1 * x[2];
            x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
            if (round == 9) break;
            k[0] += W0;
            k[1] += W1;
        }
        return x;
    }

    void increment_counter() {
        for (int i = 0; i < 4; ++i) {
            if (++counter_[i] != 0) break;
        }
    }

    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 4> counter_;
    std::array<std::uint64_t, 4> block_{};
    int pos_ = 4;
};

} // namespace lflow
