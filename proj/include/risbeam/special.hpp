// Small special-function kernels used across the library.
#pragma once

#include "risbeam/types.hpp"

#include <cmath>
#include <numbers>
#include <span>

namespace risbeam {

/// Upper-tail probability of the standard normal distribution,
/// Q(x) = P[Z > x], evaluated through the complementary error function.
template <typename Scalar>
Scalar gaussian_q(Scalar x) {
    return std::erfc(x / std::numbers::sqrt2_v<Scalar>) / Scalar(2);
}

/// Third Jacobi theta function at zero argument,
/// theta3(0, q) = sum_{n in Z} q^{n^2}, for 0 <= q < 1.
/// The series is summed directly; terms decay as q^{n^2} so a handful of
/// terms suffice for any q bounded away from 1.
template <typename Scalar>
Scalar jacobi_theta3(Scalar q) {
    if (!(q >= Scalar(0)) || q >= Scalar(1)) {
        throw DomainError("jacobi_theta3: nome q must lie in [0, 1)");
    }
    Scalar sum = Scalar(1);
    for (Index n = 1;; ++n) {
        const Scalar term = std::pow(q, Scalar(n) * Scalar(n));
        sum += Scalar(2) * term;
        if (term < Scalar(1e-16) * sum) {
            break;
        }
        if (n > 100000) {
            throw NumericalError("jacobi_theta3: series did not converge");
        }
    }
    return sum;
}

/// x * coth(x), continuous at 0 with value 1.
template <typename Scalar>
Scalar x_coth_x(Scalar x) {
    x = std::abs(x);
    if (x < Scalar(1e-8)) {
        return Scalar(1) + x * x / Scalar(3);
    }
    return x / std::tanh(x);
}

/// Power ratio in decibels.
template <typename Scalar>
Scalar to_db(Scalar power_ratio) {
    return Scalar(10) * std::log10(power_ratio);
}

template <typename Scalar>
Scalar from_db(Scalar db) {
    return std::pow(Scalar(10), db / Scalar(10));
}

/// Pairwise (cascade) summation. Order-stable and accurate for long
/// Monte Carlo accumulations.
template <typename Scalar>
Scalar pairwise_sum(std::span<const Scalar> values) {
    const std::size_t n = values.size();
    if (n == 0) return Scalar(0);
    if (n <= 8) {
        Scalar s = Scalar(0);
        for (const Scalar v : values) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

}  // namespace risbeam
