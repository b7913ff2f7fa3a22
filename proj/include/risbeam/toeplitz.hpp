// Hermitian-Toeplitz covariance of the RIS elements, its extreme
// eigenstructure, and the analytic bounds on the attainable beamforming
// gain (absolute coefficient sum, Jacobi theta, coth, geometric).
#pragma once

#include "risbeam/correlation.hpp"
#include "risbeam/geometry.hpp"
#include "risbeam/pas.hpp"
#include "risbeam/special.hpp"
#include "risbeam/types.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace risbeam {

template <typename Scalar>
class CovarianceMatrix {
  public:
    /// Eigenvalues below -psd_tolerance reject the sequence; those in
    /// [-psd_tolerance, 0) are clamped to zero for downstream sampling.
    /// Closed-form approximate sequences are asymptotic, not exact
    /// correlation kernels, so slightly indefinite inputs do occur.
    static constexpr double psd_tolerance = 1e-8;

    Index dimension() const { return matrix_.rows(); }
    const ComplexMatrix<Scalar>& matrix() const { return matrix_; }

    /// Clamped eigenvalues, ascending.
    const Vector<Scalar>& eigenvalues() const { return eigenvalues_; }
    const ComplexMatrix<Scalar>& eigenvectors() const { return eigenvectors_; }

    Scalar lambda_min_raw() const { return lambda_min_raw_; }
    Scalar trace() const { return Scalar(dimension()); }
    bool nonsingular() const { return eigenvalues_[0] > Scalar(0); }

    /// Factor L with L L^H equal to the (clamped) covariance; used to
    /// color white Gaussian draws.
    ComplexMatrix<Scalar> sqrt_factor() const {
        return eigenvectors_ * eigenvalues_.cwiseSqrt().asDiagonal();
    }

    template <typename S>
    friend CovarianceMatrix<S> build_covariance(const CorrelationSequence<S>&, Index);

  private:
    CovarianceMatrix() = default;

    ComplexMatrix<Scalar> matrix_;
    Vector<Scalar> eigenvalues_;
    ComplexMatrix<Scalar> eigenvectors_;
    Scalar lambda_min_raw_ = Scalar(0);
};

/// Build the N_r x N_r Hermitian-Toeplitz covariance with first row
/// (c_0, c_1, ..., c_{N_r - 1}).
template <typename Scalar>
CovarianceMatrix<Scalar> build_covariance(const CorrelationSequence<Scalar>& seq, Index n_r) {
    if (n_r < 1) throw DomainError("build_covariance: dimension must be >= 1");
    if (seq.n_lags() < n_r) {
        throw DomainError("build_covariance: sequence holds fewer lags than the dimension");
    }

    CovarianceMatrix<Scalar> cov;
    cov.matrix_.resize(n_r, n_r);
    for (Index k = 0; k < n_r; ++k) {
        for (Index l = 0; l < n_r; ++l) {
            cov.matrix_(k, l) = seq.at(l - k);
        }
    }

    Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver(cov.matrix_);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("build_covariance: eigendecomposition failed");
    }
    cov.eigenvalues_ = solver.eigenvalues();
    cov.eigenvectors_ = solver.eigenvectors();
    cov.lambda_min_raw_ = cov.eigenvalues_[0];
    if (cov.lambda_min_raw_ < Scalar(-CovarianceMatrix<Scalar>::psd_tolerance)) {
        throw InvalidCorrelationError(
            "build_covariance: correlation sequence is indefinite beyond tolerance "
            "(lambda_min = " + std::to_string(static_cast<double>(cov.lambda_min_raw_)) + ")");
    }
    cov.eigenvalues_ = cov.eigenvalues_.cwiseMax(Scalar(0));
    return cov;
}

/// Rank-one covariance of the zero-spread (line-of-sight) limit: every
/// coefficient has unit magnitude, c_n = e^{j 2 pi n d cos(mean) / lambda}.
/// In this limit lambda_max = N_r and the beamforming gain is unbounded
/// in the number of elements.
template <typename Scalar>
ComplexMatrix<Scalar> los_covariance_matrix(const ArrayGeometry<Scalar>& geom, Scalar mean_angle) {
    geom.validate();
    if (!(mean_angle > Scalar(0)) || !(mean_angle < std::numbers::pi_v<Scalar>)) {
        throw DomainError("los_covariance_matrix: mean_angle must lie in (0, pi)");
    }
    const Index n = geom.n_elements;
    const Scalar phi =
        Scalar(2) * std::numbers::pi_v<Scalar> * geom.spacing_ratio() * std::cos(mean_angle);
    ComplexVector<Scalar> ray(n);
    for (Index m = 0; m < n; ++m) ray[m] = std::polar(Scalar(1), phi * Scalar(m));
    return ray * ray.adjoint();
}

template <typename Scalar>
struct EigenPair {
    Scalar value;
    ComplexVector<Scalar> vector;  // unit norm
};

struct PowerIterationOptions {
    double rel_tol = 1e-12;        // successive Rayleigh-quotient change
    double residual_tol = 1e-8;    // ||A x - rq x|| relative to max(|rq|, 1)
    long max_iterations = 100000;
    long stall_iterations = 3000;  // switch to the dense fallback past this point
};

/// Largest eigenvalue and eigenvector of a Hermitian matrix by shifted
/// power iteration with a deterministic all-ones start. The shift
/// trace/N keeps the iteration matrix PSD-dominant. A clustered top of
/// the spectrum stalls the iteration; below dimension 512 the dense
/// Hermitian eigendecomposition then takes over.
template <typename Scalar>
EigenPair<Scalar> lambda_max(const ComplexMatrix<Scalar>& a,
                             const PowerIterationOptions& opts = {}) {
    const Index n = a.rows();
    if (n == 0 || a.cols() != n) throw DomainError("lambda_max: matrix must be square");
    if (n == 1) {
        ComplexVector<Scalar> v(1);
        v[0] = Complex<Scalar>(1, 0);
        return {a(0, 0).real(), v};
    }

    const Scalar shift = a.trace().real() / Scalar(n);
    ComplexVector<Scalar> x = ComplexVector<Scalar>::Constant(n, Complex<Scalar>(1, 0));
    x /= std::sqrt(Scalar(n));

    Scalar rq_prev = (x.adjoint() * a * x)(0, 0).real();
    long stable = 0;
    bool trapped = false;
    for (long iter = 0; iter < opts.max_iterations; ++iter) {
        ComplexVector<Scalar> ax = a * x;
        const Scalar rq = x.dot(ax).real();
        const Scalar scale = std::max(std::abs(rq), Scalar(1));
        const Scalar residual = (ax - rq * x).norm();

        stable = std::abs(rq - rq_prev) <= Scalar(opts.rel_tol) * scale ? stable + 1 : 0;
        if (stable >= 3 && residual <= Scalar(opts.residual_tol) * scale) {
            // A converged eigenpair below the mean eigenvalue cannot be the
            // dominant one: the start vector was orthogonal to the top
            // eigenspace (possible when a steering ray sums to zero).
            if (rq >= shift - Scalar(1e-9) * std::max(shift, Scalar(1))) {
                return {rq, x};
            }
            trapped = true;
            break;
        }
        rq_prev = rq;

        if (iter >= opts.stall_iterations && n < 512) {
            break;  // clustered dominant pair; the dense path below resolves it
        }

        ComplexVector<Scalar> y = ax + shift * x;
        const Scalar norm = y.norm();
        if (!(norm > Scalar(0))) {
            trapped = true;  // x spans an eigenvector of the shifted matrix
            break;
        }
        x = y / norm;
    }

    if (n >= 512 && !trapped) {
        throw NumericalError("lambda_max: power iteration did not converge");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver(a);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("lambda_max: dense eigendecomposition failed");
    }
    return {solver.eigenvalues()[n - 1], solver.eigenvectors().col(n - 1)};
}

template <typename Scalar>
EigenPair<Scalar> lambda_max(const CovarianceMatrix<Scalar>& cov,
                             const PowerIterationOptions& opts = {}) {
    return lambda_max(cov.matrix(), opts);
}

/// Orthonormal Fourier (DFT) vector: entry p = e^{-j 2 pi m p / N} / sqrt(N).
template <typename Scalar>
ComplexVector<Scalar> fourier_vector(Index n, Index m) {
    if (n < 1) throw DomainError("fourier_vector: dimension must be >= 1");
    if (m < 0 || m >= n) throw DomainError("fourier_vector: index out of range");
    ComplexVector<Scalar> f(n);
    const Scalar root = Scalar(1) / std::sqrt(Scalar(n));
    for (Index p = 0; p < n; ++p) {
        const Scalar phase = Scalar(-2) * std::numbers::pi_v<Scalar> * Scalar(m) * Scalar(p) / Scalar(n);
        f[p] = root * std::polar(Scalar(1), phase);
    }
    return f;
}

template <typename Scalar>
struct SpectralSummary {
    Scalar lambda_max;
    Scalar lambda_min;
    Scalar trace;
    ComplexVector<Scalar> dominant_eigvec;
    Index fourier_index_best;  // Fourier vector with the largest Rayleigh quotient
};

template <typename Scalar>
SpectralSummary<Scalar> spectral_summary(const CovarianceMatrix<Scalar>& cov) {
    const auto top = lambda_max(cov);
    const Index n = cov.dimension();
    Index best = 0;
    Scalar best_rq = -std::numeric_limits<Scalar>::infinity();
    for (Index m = 0; m < n; ++m) {
        const auto f = fourier_vector<Scalar>(n, m);
        const Scalar rq = (f.adjoint() * cov.matrix() * f)(0, 0).real();
        if (rq > best_rq) {
            best_rq = rq;
            best = m;
        }
    }
    return {top.value, cov.eigenvalues()[0], cov.trace(), top.vector, best};
}

template <typename Scalar>
struct AbsSumBound {
    Scalar value;
    Index truncation_lag;  // largest |n| included in the explicit sum
    bool tail_exact;       // true when an analytic tail closes the series
};

/// Truncated absolute coefficient sum sum_{n=-T}^{T} |c_n|. Closed-form
/// sequences extend analytically past their stored lags; the exponential
/// model additionally closes the geometric tail exactly. Exact-quadrature
/// sequences stop at their last computed lag.
template <typename Scalar>
AbsSumBound<Scalar> bound_sum_abs(const CorrelationSequence<Scalar>& seq, Index n_terms) {
    if (n_terms < 1) throw DomainError("bound_sum_abs: n_terms must be >= 1");

    const bool analytic = seq.provenance != Provenance::exact_quadrature;
    const Index stored_max = seq.n_lags() - 1;
    const Index t = analytic ? n_terms : std::min(n_terms, stored_max);

    Scalar sum = std::abs(seq.coeffs[0]);
    for (Index k = 1; k <= t; ++k) {
        const Scalar mag = k <= stored_max ? std::abs(seq.coeffs[k])
                                           : closed_form_magnitude(seq.model, seq.geometry, k);
        sum += Scalar(2) * mag;
        // Closed-form magnitudes are nonincreasing; once one underflows the
        // rest of the series contributes nothing.
        if (analytic && mag == Scalar(0)) break;
    }

    bool tail_exact = false;
    if (seq.provenance == Provenance::exponential_model) {
        const Scalar kappa = seq.model.kappa();
        if (kappa > Scalar(0)) {
            sum += Scalar(2) * std::pow(kappa, Scalar(t + 1)) / (Scalar(1) - kappa);
        }
        tail_exact = true;
    }
    return {sum, t, tail_exact};
}

/// Gaussian-family gain bound: theta3(0, q) with
/// q = e^{-2 [pi d sin(mu) sigma / lambda]^2}.
template <typename Scalar>
Scalar bound_theta(const PasModel<Scalar>& model, const ArrayGeometry<Scalar>& geom) {
    if (model.family() != PasFamily::truncated_gaussian) {
        throw FamilyError("bound_theta: defined for the truncated Gaussian family");
    }
    geom.validate();
    const Scalar arg = std::numbers::pi_v<Scalar> * geom.spacing_ratio() *
                       std::sin(model.mean_angle()) * model.angular_spread();
    const Scalar q = std::exp(Scalar(-2) * arg * arg);
    if (q >= Scalar(1)) {
        throw DomainError("bound_theta: zero-spread spectrum diverges; the bound is infinite");
    }
    return jacobi_theta3(q);
}

/// Laplacian-family gain bound: x coth(x) with
/// x = lambda / (sqrt(2) d sin(mu) sigma).
template <typename Scalar>
Scalar bound_coth(const PasModel<Scalar>& model, const ArrayGeometry<Scalar>& geom) {
    if (model.family() != PasFamily::truncated_laplacian) {
        throw FamilyError("bound_coth: defined for the truncated Laplacian family");
    }
    geom.validate();
    const Scalar denom = std::numbers::sqrt2_v<Scalar> * geom.spacing_ratio() *
                         std::sin(model.mean_angle()) * model.angular_spread();
    if (!(denom > Scalar(0)) || !std::isfinite(Scalar(1) / denom)) {
        throw DomainError("bound_coth: zero-spread spectrum diverges; the bound is infinite");
    }
    return x_coth_x(Scalar(1) / denom);
}

/// Exponential-model gain bound: (1 + kappa) / (1 - kappa).
template <typename Scalar>
Scalar bound_geometric(Scalar kappa) {
    if (!(kappa >= Scalar(0)) || kappa >= Scalar(1)) {
        throw DomainError("bound_geometric: kappa must lie in [0, 1)");
    }
    return (Scalar(1) + kappa) / (Scalar(1) - kappa);
}

/// Family-specific closed-form bound on the beamforming gain.
template <typename Scalar>
Scalar family_bound(const PasModel<Scalar>& model, const ArrayGeometry<Scalar>& geom) {
    switch (model.family()) {
        case PasFamily::truncated_gaussian: return bound_theta(model, geom);
        case PasFamily::truncated_laplacian: return bound_coth(model, geom);
        case PasFamily::exponential_correlation: return bound_geometric(model.kappa());
        case PasFamily::tabulated: break;
    }
    throw FamilyError("family_bound: no closed-form bound for a tabulated spectrum");
}

}  // namespace risbeam
