// Power angular spectrum (PAS) families on the half-space (0, pi).
//
// Densities are normalized numerically at construction so that they
// integrate to one regardless of how much probability mass the truncation
// removes; the printed closed-form normalization constants of the Gaussian
// and Laplacian families are recovered as special cases.
#pragma once

#include "risbeam/quadrature.hpp"
#include "risbeam/types.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace risbeam {

enum class PasFamily {
    truncated_gaussian,
    truncated_laplacian,
    exponential_correlation,
    tabulated,
};

inline const char* to_string(PasFamily f) {
    switch (f) {
        case PasFamily::truncated_gaussian: return "truncated_gaussian";
        case PasFamily::truncated_laplacian: return "truncated_laplacian";
        case PasFamily::exponential_correlation: return "exponential_correlation";
        case PasFamily::tabulated: return "tabulated";
    }
    return "unknown";
}

template <typename Scalar>
class PasModel {
  public:
    /// Smallest admissible angular spread (0.01 degrees). Below this the
    /// spectrum degenerates towards a line-of-sight ray and quadrature is
    /// the wrong tool; see los_covariance_matrix() for that limit.
    static constexpr double min_angular_spread = 0.01 * std::numbers::pi / 180.0;

    static PasModel truncated_gaussian(Scalar mean_angle, Scalar angular_spread) {
        PasModel m(PasFamily::truncated_gaussian);
        m.mean_angle_ = mean_angle;
        m.angular_spread_ = angular_spread;
        m.validate_angles();
        m.normalize();
        return m;
    }

    static PasModel truncated_laplacian(Scalar mean_angle, Scalar angular_spread) {
        PasModel m(PasFamily::truncated_laplacian);
        m.mean_angle_ = mean_angle;
        m.angular_spread_ = angular_spread;
        m.validate_angles();
        m.normalize();
        return m;
    }

    /// Correlation-domain model |c_n| = kappa^|n|. Carries no pointwise
    /// density; mean_angle only fixes the phase convention of the
    /// closed-form coefficients.
    static PasModel exponential_correlation(Scalar kappa,
                                            Scalar mean_angle = std::numbers::pi_v<Scalar> / 2) {
        PasModel m(PasFamily::exponential_correlation);
        if (!(kappa >= Scalar(0)) || kappa >= Scalar(1)) {
            throw DomainError("PasModel: kappa must lie in [0, 1)");
        }
        m.kappa_ = kappa;
        m.mean_angle_ = mean_angle;
        if (!(mean_angle > Scalar(0)) || !(mean_angle < std::numbers::pi_v<Scalar>)) {
            throw DomainError("PasModel: mean_angle must lie in (0, pi)");
        }
        return m;
    }

    /// Piecewise-linear density through (angle, value) samples, renormalized
    /// to integrate to one. The density is zero outside the sampled range.
    static PasModel tabulated(std::vector<std::array<Scalar, 2>> samples) {
        PasModel m(PasFamily::tabulated);
        if (samples.size() < 2) {
            throw DomainError("PasModel: tabulated spectrum needs at least two samples");
        }
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto& [angle, value] = samples[i];
            if (!(angle >= Scalar(0)) || !(angle <= std::numbers::pi_v<Scalar>)) {
                throw DomainError("PasModel: tabulated angles must lie in [0, pi]");
            }
            if (i > 0 && !(angle > samples[i - 1][0])) {
                throw DomainError("PasModel: tabulated angles must be strictly increasing");
            }
            if (!(value >= Scalar(0))) {
                throw DomainError("PasModel: tabulated density values must be nonnegative");
            }
        }
        m.table_ = std::move(samples);
        // Mean of the sampled support; downstream closed forms need an anchor.
        m.mean_angle_ = (m.table_.front()[0] + m.table_.back()[0]) / Scalar(2);
        m.normalize();
        return m;
    }

    PasFamily family() const { return family_; }
    Scalar mean_angle() const { return mean_angle_; }

    Scalar angular_spread() const {
        if (family_ != PasFamily::truncated_gaussian && family_ != PasFamily::truncated_laplacian) {
            throw FamilyError("PasModel: angular_spread is defined for Gaussian/Laplacian only");
        }
        return angular_spread_;
    }

    Scalar kappa() const {
        if (family_ != PasFamily::exponential_correlation) {
            throw FamilyError("PasModel: kappa is defined for the exponential model only");
        }
        return kappa_;
    }

    bool has_density() const { return family_ != PasFamily::exponential_correlation; }

    /// Normalized density at theta in (0, pi).
    Scalar density(Scalar theta) const {
        if (!has_density()) {
            throw FamilyError("PasModel: exponential correlation model has no pointwise density");
        }
        if (!(theta > Scalar(0)) || !(theta < std::numbers::pi_v<Scalar>)) {
            throw DomainError("PasModel: density argument must lie in (0, pi)");
        }
        return unnormalized(theta) * norm_;
    }

    /// Quadrature hints: interior points where the density has a peak,
    /// kink, or changes scale. Guarantees adaptive rules sample narrow
    /// spectra instead of stepping over them.
    std::vector<Scalar> density_breakpoints() const {
        std::vector<Scalar> pts;
        if (family_ == PasFamily::tabulated) {
            for (const auto& s : table_) pts.push_back(s[0]);
            return pts;
        }
        if (!has_density()) return pts;
        for (const Scalar k : {Scalar(-6), Scalar(-3), Scalar(-1), Scalar(0), Scalar(1), Scalar(3), Scalar(6)}) {
            pts.push_back(mean_angle_ + k * angular_spread_);
        }
        std::sort(pts.begin(), pts.end());
        return pts;
    }

  private:
    explicit PasModel(PasFamily family) : family_(family) {}

    void validate_angles() const {
        if (!(mean_angle_ > Scalar(0)) || !(mean_angle_ < std::numbers::pi_v<Scalar>)) {
            throw DomainError("PasModel: mean_angle must lie in (0, pi)");
        }
        if (!(angular_spread_ > Scalar(0))) {
            throw DomainError("PasModel: angular_spread must be > 0");
        }
        if (angular_spread_ < Scalar(min_angular_spread)) {
            throw DomainError(
                "PasModel: angular_spread below 0.01 deg; the covariance degenerates to rank one "
                "and is handled analytically, not by quadrature");
        }
    }

    Scalar unnormalized(Scalar theta) const {
        switch (family_) {
            case PasFamily::truncated_gaussian: {
                const Scalar z = (theta - mean_angle_) / angular_spread_;
                return std::exp(-z * z / Scalar(2));
            }
            case PasFamily::truncated_laplacian: {
                const Scalar z = std::numbers::sqrt2_v<Scalar> *
                                 std::abs(theta - mean_angle_) / angular_spread_;
                return std::exp(-z);
            }
            case PasFamily::tabulated: {
                if (theta <= table_.front()[0] || theta >= table_.back()[0]) {
                    // At or outside the sampled range: edge value at the ends, zero beyond.
                    if (theta <= table_.front()[0])
                        return theta == table_.front()[0] ? table_.front()[1] : Scalar(0);
                    return theta == table_.back()[0] ? table_.back()[1] : Scalar(0);
                }
                const auto it = std::upper_bound(
                    table_.begin(), table_.end(), theta,
                    [](Scalar x, const std::array<Scalar, 2>& s) { return x < s[0]; });
                const auto& hi = *it;
                const auto& lo = *(it - 1);
                const Scalar t = (theta - lo[0]) / (hi[0] - lo[0]);
                return lo[1] + t * (hi[1] - lo[1]);
            }
            case PasFamily::exponential_correlation: break;
        }
        throw FamilyError("PasModel: no density for this family");
    }

    void normalize() {
        const Scalar pi = std::numbers::pi_v<Scalar>;
        std::array<Scalar, 8> uniform;
        for (std::size_t i = 0; i < uniform.size(); ++i) {
            uniform[i] = pi * Scalar(i + 1) / Scalar(uniform.size() + 1);
        }
        const auto bps = density_breakpoints();
        const auto grid = merge_breakpoints<Scalar>(Scalar(0), pi, bps, uniform);
        QuadratureOptions opts;
        opts.abs_tol = 1e-12;
        const auto z = integrate_adaptive<Scalar>(
            [this](Scalar t) { return Complex<Scalar>(unnormalized(t), Scalar(0)); },
            std::span<const Scalar>(grid), opts);
        const Scalar total = z.value.real();
        if (!(total > Scalar(0))) {
            throw DomainError("PasModel: spectrum has no mass on (0, pi)");
        }
        norm_ = Scalar(1) / total;
    }

    PasFamily family_;
    Scalar mean_angle_ = Scalar(0);
    Scalar angular_spread_ = Scalar(0);
    Scalar kappa_ = Scalar(0);
    Scalar norm_ = Scalar(1);
    std::vector<std::array<Scalar, 2>> table_;
};

}  // namespace risbeam
