// Maximization of the two-timescale beamforming gain over unit-modulus
// RIS phase profiles.
//
// The gain of a profile with angles psi is the Hermitian quadratic form
// zeta = u^H M u, where u_m = e^{j psi_m} and M = diag(v*) C_r diag(v)
// with v the normalized steering vector. M inherits the Toeplitz
// structure of C_r and has unit trace, so zeta is a real power gain with
// zeta = 1 whenever the elements are uncorrelated.
#pragma once

#include "risbeam/geometry.hpp"
#include "risbeam/rng.hpp"
#include "risbeam/special.hpp"
#include "risbeam/toeplitz.hpp"
#include "risbeam/types.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <vector>

namespace risbeam {

enum class PhaseMethod {
    coordinate_ascent,
    fourier_asymptotic,
    brute_force,
    closed_form2,
};

inline const char* to_string(PhaseMethod m) {
    switch (m) {
        case PhaseMethod::coordinate_ascent: return "coordinate_ascent";
        case PhaseMethod::fourier_asymptotic: return "fourier_asymptotic";
        case PhaseMethod::brute_force: return "brute_force";
        case PhaseMethod::closed_form2: return "closed_form2";
    }
    return "unknown";
}

template <typename Scalar>
struct PhaseProfile {
    Vector<Scalar> angles;  // psi_m with psi_0 = 0
    Scalar gain = Scalar(0);
    PhaseMethod method = PhaseMethod::coordinate_ascent;

    ComplexVector<Scalar> unit_phases() const {
        ComplexVector<Scalar> u(angles.size());
        for (Index m = 0; m < angles.size(); ++m) u[m] = std::polar(Scalar(1), angles[m]);
        return u;
    }
};

template <typename Scalar>
struct GainMatrix {
    ComplexMatrix<Scalar> m;  // diag(v*) C_r diag(v)
    ComplexVector<Scalar> v;  // a_r / sqrt(N_r)

    Index dimension() const { return m.rows(); }
};

template <typename Scalar>
GainMatrix<Scalar> build_gain_matrix(const CovarianceMatrix<Scalar>& cov,
                                     const ArrayGeometry<Scalar>& geom) {
    if (geom.n_elements != cov.dimension()) {
        throw DomainError("build_gain_matrix: geometry and covariance dimensions differ");
    }
    GainMatrix<Scalar> gm;
    gm.v = steering_vector(geom) / std::sqrt(Scalar(cov.dimension()));
    gm.m = gm.v.conjugate().asDiagonal() * cov.matrix() * gm.v.asDiagonal();
    return gm;
}

namespace detail {

/// Wrap angles so the first one is zero; the gain is invariant under a
/// common rotation, normalizing makes profiles comparable across methods.
template <typename Scalar>
void normalize_first_angle(Vector<Scalar>& angles) {
    const Scalar twopi = Scalar(2) * std::numbers::pi_v<Scalar>;
    const Scalar offset = angles[0];
    for (Index m = 0; m < angles.size(); ++m) {
        Scalar a = angles[m] - offset;
        a = std::remainder(a, twopi);
        if (a < Scalar(0)) a += twopi;
        angles[m] = a;
    }
    angles[0] = Scalar(0);
}

template <typename Scalar>
Vector<Scalar> angles_of(const ComplexVector<Scalar>& u) {
    Vector<Scalar> angles(u.size());
    for (Index m = 0; m < u.size(); ++m) angles[m] = std::arg(u[m]);
    normalize_first_angle(angles);
    return angles;
}

}  // namespace detail

/// Evaluate the beamforming gain of a profile given by its angles. The
/// quadratic form must come out real for Hermitian M; an imaginary residue
/// above 1e-8 signals a corrupted gain matrix.
template <typename Scalar, typename Derived>
Scalar gain_of(const Eigen::MatrixBase<Derived>& angles, const GainMatrix<Scalar>& gm) {
    if (angles.size() != gm.dimension()) {
        throw DomainError("gain_of: profile and gain matrix dimensions differ");
    }
    ComplexVector<Scalar> u(angles.size());
    for (Index m = 0; m < angles.size(); ++m) {
        u[m] = std::polar(Scalar(1), static_cast<Scalar>(angles[m]));
    }
    const Complex<Scalar> val = (u.adjoint() * gm.m * u)(0, 0);
    if (std::abs(val.imag()) > Scalar(1e-8) * std::max(std::abs(val.real()), Scalar(1))) {
        throw ConsistencyError("gain_of: quadratic form has a non-negligible imaginary part");
    }
    return val.real();
}

template <typename Scalar>
Scalar gain_of(const PhaseProfile<Scalar>& profile, const GainMatrix<Scalar>& gm) {
    return gain_of(profile.angles, gm);
}

template <typename Scalar>
struct AscentOptions {
    Scalar rel_tol = Scalar(1e-10);  // relative gain increase per full sweep
    Index max_sweeps = 10000;
    std::function<void(Scalar)> on_update;  // called with the gain after every coordinate update
};

/// Cyclic coordinate ascent with the exact per-coordinate maximizer
/// psi_m = arg(sum_{k != m} M_{m,k} u_k). Every update is nondecreasing,
/// so the iteration converges monotonically to a stationary profile.
template <typename Scalar>
PhaseProfile<Scalar> optimize_coordinate_ascent(const GainMatrix<Scalar>& gm,
                                                const PhaseProfile<Scalar>& init,
                                                const AscentOptions<Scalar>& opts = {}) {
    const Index n = gm.dimension();
    if (init.angles.size() != n) {
        throw DomainError("optimize_coordinate_ascent: init profile has wrong dimension");
    }

    ComplexVector<Scalar> u = init.unit_phases();
    Scalar gain = gain_of(init.angles, gm);
    for (Index sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        const Scalar sweep_start = gain;
        for (Index m = 0; m < n; ++m) {
            const Complex<Scalar> beta = (gm.m.row(m) * u)(0, 0) - gm.m(m, m) * u[m];
            const Scalar mag = std::abs(beta);
            if (mag > Scalar(0)) {
                const Complex<Scalar> u_new = beta / mag;
                // 2 Re{conj(u_new - u_old) beta} >= 0 by the maximizer choice.
                gain += Scalar(2) * (std::conj(u_new - u[m]) * beta).real();
                u[m] = u_new;
            }
            if (opts.on_update) opts.on_update(gain);
        }
        if (gain - sweep_start <= opts.rel_tol * std::max(std::abs(gain), Scalar(1))) {
            break;
        }
    }

    PhaseProfile<Scalar> out;
    out.angles = detail::angles_of(u);
    out.gain = gain_of(out.angles, gm);  // exact re-evaluation, no incremental drift
    out.method = PhaseMethod::coordinate_ascent;
    return out;
}

/// Best profile among the N_r Fourier vectors scaled to unit-modulus
/// entries. Feasible for the gain maximization, hence a lower bound on the
/// optimum, and asymptotically optimal as N_r grows. Ties break toward the
/// lowest Fourier index.
template <typename Scalar>
PhaseProfile<Scalar> dft_phase_profile(const GainMatrix<Scalar>& gm) {
    const Index n = gm.dimension();
    PhaseProfile<Scalar> best;
    best.method = PhaseMethod::fourier_asymptotic;
    best.gain = -std::numeric_limits<Scalar>::infinity();
    Vector<Scalar> angles(n);
    for (Index m = 0; m < n; ++m) {
        for (Index p = 0; p < n; ++p) {
            angles[p] = Scalar(-2) * std::numbers::pi_v<Scalar> * Scalar(m) * Scalar(p) / Scalar(n);
        }
        detail::normalize_first_angle(angles);
        const Scalar g = gain_of(angles, gm);
        if (g > best.gain) {
            best.gain = g;
            best.angles = angles;
        }
    }
    return best;
}

/// Closed-form optimum for a two-element RIS: align the single cross term,
/// which yields zeta = 1 + |c_1| = 1 + 2 |M_{0,1}|.
template <typename Scalar>
PhaseProfile<Scalar> closed_form_two_element(const GainMatrix<Scalar>& gm) {
    if (gm.dimension() != 2) {
        throw DomainError("closed_form_two_element: defined for N_r = 2");
    }
    PhaseProfile<Scalar> out;
    out.method = PhaseMethod::closed_form2;
    out.angles = Vector<Scalar>::Zero(2);
    out.angles[1] = std::arg(gm.m(1, 0));
    detail::normalize_first_angle(out.angles);
    out.gain = gain_of(out.angles, gm);
    return out;
}

/// Exhaustive search over a uniform angle grid, for small instances only.
/// The optimum of the smooth quadratic form lies within
/// O(lambda_max N_r (pi / grid_points)^2) of the best grid point.
template <typename Scalar>
PhaseProfile<Scalar> brute_force_oracle(const GainMatrix<Scalar>& gm, Index grid_points) {
    const Index n = gm.dimension();
    if (n > 4) {
        throw DomainError("brute_force_oracle: refusing N_r > 4 (combinatorial search)");
    }
    if (grid_points < 16) throw DomainError("brute_force_oracle: grid_points must be >= 16");

    const Scalar twopi = Scalar(2) * std::numbers::pi_v<Scalar>;
    PhaseProfile<Scalar> best;
    best.method = PhaseMethod::brute_force;
    best.gain = -std::numeric_limits<Scalar>::infinity();

    Vector<Scalar> angles = Vector<Scalar>::Zero(n);
    std::vector<Index> idx(static_cast<std::size_t>(n > 1 ? n - 1 : 0), 0);
    while (true) {
        for (Index m = 1; m < n; ++m) {
            angles[m] = twopi * Scalar(idx[static_cast<std::size_t>(m - 1)]) / Scalar(grid_points);
        }
        const Scalar g = gain_of(angles, gm);
        if (g > best.gain) {
            best.gain = g;
            best.angles = angles;
        }
        // odometer increment over the (n-1)-dimensional grid
        std::size_t pos = 0;
        for (; pos < idx.size(); ++pos) {
            if (++idx[pos] < grid_points) break;
            idx[pos] = 0;
        }
        if (pos == idx.size()) break;
    }
    return best;
}

/// Statistical phase optimization: coordinate ascent from the best Fourier
/// profile, from the entrywise-phase rounding of the dominant eigenvector,
/// and from seeded random restarts, keeping the best result. Random phases
/// are drawn in the statistics frame (the steering phases are subtracted),
/// which makes the optimized gain independent of the departure angle down
/// to floating-point noise.
template <typename Scalar>
PhaseProfile<Scalar> optimize_phases(const CovarianceMatrix<Scalar>& cov,
                                     const ArrayGeometry<Scalar>& geom, std::uint64_t seed,
                                     Index n_restarts = 5) {
    const GainMatrix<Scalar> gm = build_gain_matrix(cov, geom);
    const Index n = cov.dimension();

    std::vector<PhaseProfile<Scalar>> inits;
    inits.push_back(dft_phase_profile(gm));

    ComplexVector<Scalar> rounded(n);
    const ComplexVector<Scalar> dominant = cov.eigenvectors().col(n - 1);
    for (Index m = 0; m < n; ++m) {
        const Complex<Scalar> z = std::conj(gm.v[m]) * dominant[m];
        rounded[m] = std::abs(z) > Scalar(0) ? z / std::abs(z) : Complex<Scalar>(1, 0);
    }
    PhaseProfile<Scalar> eig_init;
    eig_init.angles = detail::angles_of(rounded);
    eig_init.gain = gain_of(eig_init.angles, gm);
    inits.push_back(eig_init);

    RandomStream rng(seed, /*stream_id=*/0x9e1);
    const Scalar twopi = Scalar(2) * std::numbers::pi_v<Scalar>;
    for (Index r = 0; r < n_restarts; ++r) {
        PhaseProfile<Scalar> p;
        p.angles = Vector<Scalar>(n);
        for (Index m = 0; m < n; ++m) {
            p.angles[m] = twopi * static_cast<Scalar>(rng.uniform01()) - std::arg(gm.v[m]);
        }
        detail::normalize_first_angle(p.angles);
        p.gain = gain_of(p.angles, gm);
        inits.push_back(p);
    }

    PhaseProfile<Scalar> best;
    best.gain = -std::numeric_limits<Scalar>::infinity();
    for (const auto& init : inits) {
        const auto res = optimize_coordinate_ascent(gm, init);
        if (res.gain > best.gain) best = res;
    }
    return best;
}

/// CSV serialization of a phase profile: columns m, psi_radians.
template <typename Scalar>
void write_csv(const PhaseProfile<Scalar>& profile, std::ostream& os) {
    os << "m,psi_radians\n";
    for (Index m = 0; m < profile.angles.size(); ++m) {
        os << m << ',' << profile.angles[m] << '\n';
    }
}

template <typename Scalar>
struct MonteCarloEstimate {
    Scalar mean;
    Scalar std_error;
    Index samples;
};

/// Monte Carlo estimate of the gain with per-realization optimal phases.
/// For each draw the optimum aligns every term, giving
/// (sum_m |h_m|)^2 / N_r; averaged over h ~ CN(0, C_r) this grows
/// linearly in N_r instead of saturating.
template <typename Scalar>
MonteCarloEstimate<Scalar> instantaneous_benchmark(const CovarianceMatrix<Scalar>& cov,
                                                   Index samples, std::uint64_t seed) {
    if (samples < 1000) {
        throw DomainError("instantaneous_benchmark: need at least 1e3 samples");
    }
    const Index n = cov.dimension();
    const ComplexMatrix<Scalar> factor = cov.sqrt_factor();
    RandomStream rng(seed, /*stream_id=*/0xbe2);

    std::vector<Scalar> values(static_cast<std::size_t>(samples));
    std::vector<Scalar> squares(static_cast<std::size_t>(samples));
    for (Index s = 0; s < samples; ++s) {
        const ComplexVector<Scalar> h = factor * rng.complex_gaussian_vector<Scalar>(n);
        const Scalar amp = h.cwiseAbs().sum();
        const Scalar g = amp * amp / Scalar(n);
        values[static_cast<std::size_t>(s)] = g;
        squares[static_cast<std::size_t>(s)] = g * g;
    }
    const Scalar mean = pairwise_sum<Scalar>(values) / Scalar(samples);
    const Scalar second = pairwise_sum<Scalar>(squares) / Scalar(samples);
    const Scalar variance = std::max(second - mean * mean, Scalar(0));
    return {mean, std::sqrt(variance / Scalar(samples)), samples};
}

}  // namespace risbeam
