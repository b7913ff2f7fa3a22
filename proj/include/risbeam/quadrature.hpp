// Adaptive Gauss-Kronrod quadrature for complex-valued integrands on a
// bounded interval. Callers seed the initial partition with breakpoints
// (oscillation grids, density kinks, spike locations); the worst panel is
// then bisected until the global error estimate meets the tolerance.
#pragma once

#include "risbeam/types.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace risbeam {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    int max_panels = 20000;
};

template <typename Scalar>
struct QuadratureResult {
    Complex<Scalar> value;
    Scalar error_estimate;
    int panels;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1]. Nodes are the
// nonnegative half; the rule is symmetric.
template <typename Scalar>
struct GaussKronrod15 {
    static constexpr std::array<Scalar, 8> nodes = {
        Scalar(0.0000000000000000000000000L), Scalar(0.2077849550078984676006894L),
        Scalar(0.4058451513773971669066064L), Scalar(0.5860872354676911302941448L),
        Scalar(0.7415311855993944398638648L), Scalar(0.8648644233597690727897128L),
        Scalar(0.9491079123427585245261897L), Scalar(0.9914553711208126392068547L)};

    static constexpr std::array<Scalar, 8> kronrod_weights = {
        Scalar(0.2094821410847278280129992L), Scalar(0.2044329400752988924141620L),
        Scalar(0.1903505780647854099132564L), Scalar(0.1690047266392679028265834L),
        Scalar(0.1406532597155259187451896L), Scalar(0.1047900103222501838398763L),
        Scalar(0.0630920926299785532907007L), Scalar(0.0229353220105292249637320L)};

    // Gauss weights for nodes 1, 3, 5, 7 (node 0 is the midpoint).
    static constexpr std::array<Scalar, 4> gauss_weights = {
        Scalar(0.3818300505051189449503698L), Scalar(0.2797053914892766679014678L),
        Scalar(0.1294849661688696932706114L), Scalar(0.4179591836734693877551020L)};
};

template <typename Scalar, typename F>
void evaluate_panel(F&& f, Scalar a, Scalar b, Complex<Scalar>& value, Scalar& error) {
    using Rule = GaussKronrod15<Scalar>;
    const Scalar mid = (a + b) / Scalar(2);
    const Scalar halflen = (b - a) / Scalar(2);

    const Complex<Scalar> f_mid = f(mid);
    Complex<Scalar> kronrod = Rule::kronrod_weights[0] * f_mid;
    Complex<Scalar> gauss = Rule::gauss_weights[3] * f_mid;
    for (int i = 1; i < 8; ++i) {
        const Scalar offset = Rule::nodes[i] * halflen;
        const Complex<Scalar> pair = f(mid + offset) + f(mid - offset);
        kronrod += Rule::kronrod_weights[i] * pair;
        if (i % 2 == 0) {
            // Even indices hold the embedded Gauss-7 nodes.
            gauss += Rule::gauss_weights[i / 2 - 1] * pair;
        }
    }
    kronrod *= halflen;
    gauss *= halflen;
    value = kronrod;
    error = std::abs(kronrod - gauss);
}

}  // namespace detail

/// Integrate a complex-valued integrand over [breakpoints.front(),
/// breakpoints.back()], seeding one panel per consecutive breakpoint pair.
/// Throws NumericalError if the panel budget is exhausted before the
/// absolute tolerance is met.
template <typename Scalar, typename F>
QuadratureResult<Scalar> integrate_adaptive(F&& f, std::span<const Scalar> breakpoints,
                                            const QuadratureOptions& opts = {}) {
    if (breakpoints.size() < 2) {
        throw DomainError("integrate_adaptive: need at least two breakpoints");
    }
    if (!std::is_sorted(breakpoints.begin(), breakpoints.end())) {
        throw DomainError("integrate_adaptive: breakpoints must be sorted");
    }

    struct Panel {
        Scalar a, b, error;
        Complex<Scalar> value;
        int id;  // creation order; tie-breaker keeps the refinement deterministic
    };
    const auto worse = [](const Panel& x, const Panel& y) {
        return x.error < y.error || (x.error == y.error && x.id > y.id);
    };

    std::vector<Panel> heap;
    heap.reserve(breakpoints.size() + 64);
    int next_id = 0;
    Scalar total_error = Scalar(0);
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i] == breakpoints[i + 1]) continue;
        Panel p{breakpoints[i], breakpoints[i + 1], Scalar(0), Complex<Scalar>(0), next_id++};
        detail::evaluate_panel(f, p.a, p.b, p.value, p.error);
        total_error += p.error;
        heap.push_back(p);
    }
    std::make_heap(heap.begin(), heap.end(), worse);

    while (total_error > Scalar(opts.abs_tol) &&
           static_cast<int>(heap.size()) < opts.max_panels) {
        std::pop_heap(heap.begin(), heap.end(), worse);
        Panel parent = heap.back();
        heap.pop_back();
        total_error -= parent.error;

        const Scalar mid = (parent.a + parent.b) / Scalar(2);
        if (mid <= parent.a || mid >= parent.b) {
            // Interval no longer splittable in floating point.
            total_error += parent.error;
            heap.push_back(parent);
            std::push_heap(heap.begin(), heap.end(), worse);
            break;
        }
        for (const auto& [lo, hi] : {std::pair{parent.a, mid}, std::pair{mid, parent.b}}) {
            Panel child{lo, hi, Scalar(0), Complex<Scalar>(0), next_id++};
            detail::evaluate_panel(f, child.a, child.b, child.value, child.error);
            total_error += child.error;
            heap.push_back(child);
            std::push_heap(heap.begin(), heap.end(), worse);
        }
    }

    if (total_error > Scalar(opts.abs_tol)) {
        throw NumericalError("integrate_adaptive: tolerance not reached within panel budget");
    }

    std::vector<Complex<Scalar>> values;
    values.reserve(heap.size());
    for (const Panel& p : heap) values.push_back(p.value);
    Complex<Scalar> total(0);
    for (const auto& v : values) total += v;
    return {total, total_error, static_cast<int>(heap.size())};
}

/// Convenience overload over a plain interval [a, b] with a uniform
/// initial partition.
template <typename Scalar, typename F>
QuadratureResult<Scalar> integrate_adaptive(F&& f, Scalar a, Scalar b, int initial_panels = 8,
                                            const QuadratureOptions& opts = {}) {
    initial_panels = std::max(initial_panels, 1);
    std::vector<Scalar> pts(static_cast<std::size_t>(initial_panels) + 1);
    for (int i = 0; i <= initial_panels; ++i) {
        pts[static_cast<std::size_t>(i)] =
            a + (b - a) * Scalar(i) / Scalar(initial_panels);
    }
    return integrate_adaptive(std::forward<F>(f), std::span<const Scalar>(pts), opts);
}

/// Merge sorted breakpoint sets, dropping points outside [lo, hi] and
/// de-duplicating near-coincident entries.
template <typename Scalar>
std::vector<Scalar> merge_breakpoints(Scalar lo, Scalar hi,
                                      std::span<const Scalar> a,
                                      std::span<const Scalar> b) {
    std::vector<Scalar> pts;
    pts.reserve(a.size() + b.size() + 2);
    pts.push_back(lo);
    for (const Scalar x : a)
        if (x > lo && x < hi) pts.push_back(x);
    for (const Scalar x : b)
        if (x > lo && x < hi) pts.push_back(x);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    const Scalar min_gap = (hi - lo) * std::numeric_limits<Scalar>::epsilon() * Scalar(16);
    std::vector<Scalar> out;
    out.reserve(pts.size());
    for (const Scalar x : pts) {
        if (out.empty() || x - out.back() > min_gap) out.push_back(x);
    }
    if (out.size() < 2) out = {lo, hi};
    out.back() = hi;
    return out;
}

}  // namespace risbeam
