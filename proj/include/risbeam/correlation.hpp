// Spatial correlation coefficients c_n between RIS elements.
//
// Exact route: c_n = integral over (0, pi) of P(theta) e^{j 2 pi n d
// cos(theta) / lambda} d theta, by adaptive quadrature with an
// oscillation-aware initial partition. Approximate route: the small-spread
// closed forms of each family, with a stationary-phase center
// e^{j 2 pi n d cos(mu) / lambda} supplying the phase the magnitude-only
// closed forms leave open.
#pragma once

#include "risbeam/geometry.hpp"
#include "risbeam/pas.hpp"
#include "risbeam/quadrature.hpp"
#include "risbeam/types.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <vector>

namespace risbeam {

enum class Provenance {
    exact_quadrature,
    closed_form_approx,
    exponential_model,
};

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::exact_quadrature: return "exact_quadrature";
        case Provenance::closed_form_approx: return "closed_form_approx";
        case Provenance::exponential_model: return "exponential_model";
    }
    return "unknown";
}

template <typename Scalar>
struct CorrelationSequence {
    ComplexVector<Scalar> coeffs;  // c_0 .. c_{n_lags-1}
    Provenance provenance = Provenance::exact_quadrature;
    ArrayGeometry<Scalar> geometry;
    PasModel<Scalar> model;

    Index n_lags() const { return coeffs.size(); }

    /// Hermitian extension: at(-n) = conj(at(n)). Negative lags are never stored.
    Complex<Scalar> at(Index n) const {
        const Index k = n < 0 ? -n : n;
        if (k >= coeffs.size()) throw DomainError("CorrelationSequence: lag out of range");
        return n < 0 ? std::conj(coeffs[k]) : coeffs[k];
    }
};

/// Closed-form magnitude |c_n| of the Gaussian/Laplacian small-spread
/// approximations and of the exponential model.
template <typename Scalar>
Scalar closed_form_magnitude(const PasModel<Scalar>& model, const ArrayGeometry<Scalar>& geom,
                             Index n) {
    const Scalar a = std::numbers::pi_v<Scalar> * geom.spacing_ratio() * Scalar(n < 0 ? -n : n) *
                     std::sin(model.mean_angle());
    switch (model.family()) {
        case PasFamily::truncated_gaussian: {
            const Scalar arg = a * model.angular_spread();
            return std::exp(Scalar(-2) * arg * arg);
        }
        case PasFamily::truncated_laplacian: {
            const Scalar arg = a * model.angular_spread();
            return Scalar(1) / (Scalar(1) + Scalar(2) * arg * arg);
        }
        case PasFamily::exponential_correlation:
            return std::pow(model.kappa(), Scalar(n < 0 ? -n : n));
        case PasFamily::tabulated: break;
    }
    throw FamilyError("closed_form_magnitude: no closed form for a tabulated spectrum");
}

namespace detail {

/// Stationary-phase center of the correlation integral.
template <typename Scalar>
Complex<Scalar> approx_phase(const PasModel<Scalar>& model, const ArrayGeometry<Scalar>& geom,
                             Index n) {
    const Scalar phi = Scalar(2) * std::numbers::pi_v<Scalar> * Scalar(n) * geom.spacing_ratio() *
                       std::cos(model.mean_angle());
    return std::polar(Scalar(1), phi);
}

}  // namespace detail

/// Exact correlation coefficients c_0 .. c_{n_max-1} by adaptive
/// quadrature, tolerance 1e-10 per coefficient. The kernel sweeps roughly
/// 2 n d / lambda oscillation periods over (0, pi), so the initial
/// partition allots at least eight panels per period.
template <typename Scalar>
CorrelationSequence<Scalar> correlation_exact(const PasModel<Scalar>& model,
                                              const ArrayGeometry<Scalar>& geom, Index n_max,
                                              const QuadratureOptions& opts = {}) {
    if (!model.has_density()) {
        throw FamilyError("correlation_exact: model has no pointwise density; "
                          "use correlation_approx for the exponential model");
    }
    if (n_max < 1) throw DomainError("correlation_exact: n_max must be >= 1");
    geom.validate();

    const Scalar pi = std::numbers::pi_v<Scalar>;
    const auto density_bps = model.density_breakpoints();

    CorrelationSequence<Scalar> seq{ComplexVector<Scalar>(n_max), Provenance::exact_quadrature,
                                    geom, model};
    for (Index n = 0; n < n_max; ++n) {
        const Scalar omega = Scalar(2) * pi * Scalar(n) * geom.spacing_ratio();
        const int periods = static_cast<int>(std::ceil(std::abs(omega) / pi));
        const int panels = std::max(8, 8 * periods);
        std::vector<Scalar> uniform(static_cast<std::size_t>(panels) - 1);
        for (int i = 1; i < panels; ++i) {
            uniform[static_cast<std::size_t>(i) - 1] = pi * Scalar(i) / Scalar(panels);
        }
        const auto grid = merge_breakpoints<Scalar>(Scalar(0), pi, density_bps, uniform);
        try {
            const auto r = integrate_adaptive<Scalar>(
                [&](Scalar t) {
                    return model.density(t) * std::polar(Scalar(1), omega * std::cos(t));
                },
                std::span<const Scalar>(grid), opts);
            seq.coeffs[n] = r.value;
        } catch (const NumericalError& e) {
            throw NumericalError(std::string("correlation_exact: ") + e.what(), n);
        }
    }
    return seq;
}

/// Closed-form approximate coefficients of the Gaussian, Laplacian, and
/// exponential families.
template <typename Scalar>
CorrelationSequence<Scalar> correlation_approx(const PasModel<Scalar>& model,
                                               const ArrayGeometry<Scalar>& geom, Index n_max) {
    if (model.family() == PasFamily::tabulated) {
        throw FamilyError("correlation_approx: tabulated spectra have no closed form");
    }
    if (n_max < 1) throw DomainError("correlation_approx: n_max must be >= 1");
    geom.validate();

    const Provenance prov = model.family() == PasFamily::exponential_correlation
                                ? Provenance::exponential_model
                                : Provenance::closed_form_approx;
    CorrelationSequence<Scalar> seq{ComplexVector<Scalar>(n_max), prov, geom, model};
    for (Index n = 0; n < n_max; ++n) {
        seq.coeffs[n] = closed_form_magnitude(model, geom, n) * detail::approx_phase(model, geom, n);
    }
    return seq;
}

template <typename Scalar>
struct WienerClassReport {
    bool summable = false;
    Scalar partial_sum = Scalar(0);       // sum of |c_n| over lags -(N-1) .. N-1
    Scalar decay_exponent = Scalar(0);    // least-squares slope of log|c_n| vs log n
};

/// Tail-decay diagnostic: fits log|c_n| against log n over the trailing
/// `tail_window` lags. An estimated exponent below -1.1 certifies
/// |c_n| = o(1/n) with margin, i.e. an absolutely summable (Wiener-class)
/// sequence. Exact zeros in the tail are excluded from the fit; a tail
/// of zeros short-circuits to summable with a -inf exponent.
template <typename Scalar>
WienerClassReport<Scalar> wiener_class_check(const CorrelationSequence<Scalar>& seq,
                                             Index tail_window) {
    const Index n = seq.n_lags();
    if (tail_window < 2 || n < tail_window + 8) {
        throw DomainError("wiener_class_check: sequence must hold at least tail_window + 8 lags");
    }

    WienerClassReport<Scalar> report;
    report.partial_sum = std::abs(seq.coeffs[0]);
    for (Index i = 1; i < n; ++i) report.partial_sum += Scalar(2) * std::abs(seq.coeffs[i]);

    Scalar sx = 0, sy = 0, sxx = 0, sxy = 0;
    Index count = 0;
    for (Index i = n - tail_window; i < n; ++i) {
        const Scalar mag = std::abs(seq.coeffs[i]);
        if (mag <= Scalar(0)) continue;
        const Scalar x = std::log(Scalar(i));
        const Scalar y = std::log(mag);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++count;
    }
    if (count < 2) {
        report.decay_exponent = -std::numeric_limits<Scalar>::infinity();
        report.summable = true;
        return report;
    }
    const Scalar denom = Scalar(count) * sxx - sx * sx;
    report.decay_exponent = (Scalar(count) * sxy - sx * sy) / denom;
    report.summable = report.decay_exponent < Scalar(-1.1);
    return report;
}

/// CSV serialization: columns n, re, im, abs. Values are printed with
/// round-trip precision by the callers' writer; this overload keeps the
/// raw layout for quick dumps.
template <typename Scalar>
void write_csv(const CorrelationSequence<Scalar>& seq, std::ostream& os) {
    os << "n,re,im,abs\n";
    for (Index i = 0; i < seq.n_lags(); ++i) {
        const auto c = seq.coeffs[i];
        os << i << ',' << c.real() << ',' << c.imag() << ',' << std::abs(c) << '\n';
    }
}

}  // namespace risbeam
