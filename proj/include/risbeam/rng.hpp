// Deterministic random streams for Monte Carlo runs.
//
// The generator is std::mt19937_64 (bit-exact across conforming standard
// libraries). Uniform and Gaussian variates are derived here rather than
// through std::*_distribution, whose algorithms are implementation-defined.
// Substreams mix (seed, stream_id) through splitmix64, so parallel batches
// can draw from independent, reproducible streams.
#pragma once

#include "risbeam/types.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace risbeam {

constexpr std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0) {
        std::uint64_t state = seed;
        (void)splitmix64_next(state);
        state ^= 0xa02bdbf7bb3c0a7ULL * (stream_id + 1);
        engine_.seed(splitmix64_next(state));
    }

    /// Generator/transform identifier recorded in output metadata.
    static constexpr const char* algorithm() { return "mt19937_64/box-muller"; }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1]; safe as a logarithm argument.
    double uniform01_open_low() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard complex Gaussian CN(0, 1): E[z] = 0, E[|z|^2] = 1.
    /// Box-Muller in polar form; |z|^2 is unit-mean exponential.
    template <typename Scalar = double>
    Complex<Scalar> complex_gaussian() {
        const double radius = std::sqrt(-std::log(uniform01_open_low()));
        const double phase = 2.0 * std::numbers::pi * uniform01();
        return Complex<Scalar>(static_cast<Scalar>(radius * std::cos(phase)),
                               static_cast<Scalar>(radius * std::sin(phase)));
    }

    template <typename Scalar = double>
    ComplexVector<Scalar> complex_gaussian_vector(Index n) {
        ComplexVector<Scalar> v(n);
        for (Index i = 0; i < n; ++i) v[i] = complex_gaussian<Scalar>();
        return v;
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace risbeam
