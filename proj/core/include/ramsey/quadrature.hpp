#pragma once

// Globally adaptive Gauss–Kronrod (7/15) quadrature on a finite interval.
// The interval is optionally pre-split into equal panels, which is how callers
// resolve oscillatory integrands whose frequency is known in advance.

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace ramsey::quadrature {

struct Options {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;
    int initial_panels = 1;
    int max_intervals = 20000;
};

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
    bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for kronrod_nodes[1], [3], [5] and the centre.
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Interval& other) const noexcept { return error < other.error; }
};

template <class F>
Interval gk15(F& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = fc * kronrod_weights[7];
    double gauss = fc * gauss_weights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += kronrod_weights[j] * pair;
        if (j % 2 == 1) gauss += gauss_weights[j / 2] * pair;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

template <class F>
Result integrate(F&& f, double a, double b, const Options& opts = {}) {
    Result result;
    if (a == b) {
        result.converged = true;
        return result;
    }
    const int panels = std::max(1, opts.initial_panels);
    std::priority_queue<detail::Interval> heap;
    const double width = (b - a) / panels;
    double value = 0.0;
    double error = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double lo = a + k * width;
        const double hi = (k + 1 == panels) ? b : a + (k + 1) * width;
        auto piece = detail::gk15(f, lo, hi);
        value += piece.value;
        error += piece.error;
        heap.push(piece);
    }
    result.evaluations = 15 * panels;

    auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(value)); };
    while (error > tolerance() && static_cast<int>(heap.size()) < opts.max_intervals) {
        const detail::Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        auto left = detail::gk15(f, worst.a, mid);
        auto right = detail::gk15(f, mid, worst.b);
        result.evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum from the pieces to shed the drift of the running updates.
    value = 0.0;
    error = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    result.value = value;
    result.abs_error = error;
    result.converged = error <= tolerance();
    return result;
}

}  // namespace ramsey::quadrature
