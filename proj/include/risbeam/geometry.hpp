// Uniform linear RIS geometry and its steering vector.
#pragma once

#include "risbeam/types.hpp"

#include <cmath>
#include <numbers>

namespace risbeam {

template <typename Scalar>
struct ArrayGeometry {
    Index n_elements = 1;          // N_r
    Scalar spacing = Scalar(0.5);  // d, element spacing
    Scalar wavelength = Scalar(1); // lambda_c, carrier wavelength
    Scalar departure_angle = std::numbers::pi_v<Scalar> / Scalar(2);  // theta_r

    Scalar spacing_ratio() const { return spacing / wavelength; }

    void validate() const {
        if (n_elements < 1) throw DomainError("ArrayGeometry: n_elements must be >= 1");
        if (!(spacing > Scalar(0))) throw DomainError("ArrayGeometry: spacing must be > 0");
        if (!(wavelength > Scalar(0))) throw DomainError("ArrayGeometry: wavelength must be > 0");
        if (!std::isfinite(spacing_ratio()))
            throw DomainError("ArrayGeometry: spacing/wavelength must be finite");
        if (!(departure_angle > Scalar(0)) || !(departure_angle < std::numbers::pi_v<Scalar>))
            throw DomainError("ArrayGeometry: departure_angle must lie in (0, pi)");
    }
};

/// Steering vector of the linear array at its departure angle:
/// entry m = exp(j 2 pi m d cos(theta_r) / lambda), so |a|^2 = N_r.
template <typename Scalar>
ComplexVector<Scalar> steering_vector(const ArrayGeometry<Scalar>& geom) {
    geom.validate();
    const Scalar step =
        Scalar(2) * std::numbers::pi_v<Scalar> * geom.spacing_ratio() * std::cos(geom.departure_angle);
    ComplexVector<Scalar> a(geom.n_elements);
    for (Index m = 0; m < geom.n_elements; ++m) {
        a[m] = std::polar(Scalar(1), step * Scalar(m));
    }
    return a;
}

}  // namespace risbeam
