#include "qdeph/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>
#include <vector>

namespace qdeph {

namespace {

// 15-point Kronrod rule with embedded 7-point Gauss (positive abscissae).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b;
    double value;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double hw = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    const double fc = f(c);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double lo = f(c - hw * kXgk[i]);
        const double hi = f(c + hw * kXgk[i]);
        kron += kWgk[i] * (lo + hi);
        if (i % 2 == 1) gauss += kWg[i / 2] * (lo + hi);
    }
    kron *= hw;
    gauss *= hw;
    return Panel{a, b, kron, std::abs(kron - gauss)};
}

} // namespace

IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       std::optional<double> oscillation_period,
                                       const QuadratureSpec& spec) {
    spec.validate();

    std::vector<Panel> panels;
    double sum = 0.0;
    double tail_bound = 0.0;
    auto gate = [&]() { return std::max(spec.abs_tol, spec.rel_tol * std::abs(sum)) / 8.0; };

    // Initial decomposition. Panel edges grow geometrically from eps so a
    // narrow envelope near w = 0 is always sampled, then (when oscillating)
    // lock onto half-period multiples; trailing panels must stay quiet for
    // three consecutive steps beyond the minimum coverage before stopping.
    const bool osc = oscillation_period && *oscillation_period > 0.0 &&
                     std::isfinite(*oscillation_period);
    const double half = osc ? 0.5 * *oscillation_period : 0.0;
    constexpr double kEps0 = 0x1p-16;
    const double coverage = osc ? std::max(1.0, 3.0 * half) : 16.0;
    auto next_edge = [&](double w) {
        const double cap = osc ? half : 1.0;
        if (w < cap) return std::min(cap, w == 0.0 ? std::min(kEps0, cap) : 2.0 * w);
        return osc ? w + half : 2.0 * w;
    };

    {
        double w = 0.0;
        int quiet = 0;
        double last_mag = 0.0;
        while (quiet < 3) {
            if (static_cast<int>(panels.size()) >= spec.max_panels)
                throw accuracy_error(
                    "integrate_semi_infinite: panel budget exhausted during decomposition",
                    sum, std::abs(sum));
            const double e = next_edge(w);
            Panel p = gk15(f, w, e);
            panels.push_back(p);
            sum += p.value;
            w = e;
            last_mag = std::abs(p.value) + p.error;
            if (w >= coverage) quiet = (last_mag <= gate()) ? quiet + 1 : 0;
        }
        tail_bound = last_mag;
    }

    double err = tail_bound;
    for (const Panel& p : panels) err += p.error;

    // Worst-first refinement. Heap keys: (error desc, left endpoint asc) for a
    // deterministic split order independent of the panel budget.
    using Key = std::tuple<double, double, std::size_t>;
    auto cmp = [](const Key& x, const Key& y) {
        if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
        return std::get<1>(x) > std::get<1>(y);
    };
    std::priority_queue<Key, std::vector<Key>, decltype(cmp)> heap(cmp);
    for (std::size_t i = 0; i < panels.size(); ++i)
        heap.push({panels[i].error, panels[i].a, i});

    double best_value = sum;
    double best_err = err;
    int best_panels = static_cast<int>(panels.size());

    auto tolerance = [&]() { return std::max(spec.abs_tol, spec.rel_tol * std::abs(sum)); };

    while (err > tolerance() && static_cast<int>(panels.size()) < spec.max_panels) {
        auto [perr, pa, idx] = heap.top();
        heap.pop();
        if (panels[idx].error != perr) continue; // stale entry
        Panel parent = panels[idx];
        const double mid = 0.5 * (parent.a + parent.b);
        Panel left = gk15(f, parent.a, mid);
        Panel right = gk15(f, mid, parent.b);
        sum += left.value + right.value - parent.value;
        err += left.error + right.error - parent.error;
        panels[idx] = left;
        heap.push({left.error, left.a, idx});
        panels.push_back(right);
        heap.push({right.error, right.a, panels.size() - 1});
        if (err < best_err) {
            best_err = err;
            best_value = sum;
            best_panels = static_cast<int>(panels.size());
        }
    }

    if (err < best_err) {
        best_err = err;
        best_value = sum;
        best_panels = static_cast<int>(panels.size());
    }
    if (best_err > tolerance())
        throw accuracy_error("integrate_semi_infinite: tolerance not reached within max_panels",
                             best_value, best_err);
    return IntegralResult{best_value, best_err, best_panels};
}

} // namespace qdeph
