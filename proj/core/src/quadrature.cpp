#include "conetrace/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace conetrace {
namespace {

// 15-point Kronrod nodes on [-1,1] (positive half) with the embedded
// 7-point Gauss rule; the classic QUADPACK dqk15 tables.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct PanelEval {
    double value;
    double err;
};

PanelEval gk15(const EndpointAwareIntegrand& f, double a, double b, double ga, double gb,
               long& n_evals) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center, center - ga, gb - center);
    double result_gauss = kWg[3] * fc;
    double result_kronrod = kWgk[7] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    double fv1[7], fv2[7];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double x1 = center - dx;
        const double x2 = center + dx;
        fv1[i] = f(x1, x1 - ga, gb - x1);
        fv2[i] = f(x2, x2 - ga, gb - x2);
        const double sum = fv1[i] + fv2[i];
        result_kronrod += kWgk[i] * sum;
        resabs += kWgk[i] * (std::abs(fv1[i]) + std::abs(fv2[i]));
        if (i % 2 == 1) result_gauss += kWg[i / 2] * sum;
    }
    n_evals += 15;

    const double mean = 0.5 * result_kronrod;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fv1[i] - mean) + std::abs(fv2[i] - mean));

    const double value = result_kronrod * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((result_kronrod - result_gauss) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    err = std::max(err, 50.0 * kEps * resabs);
    return {value, err};
}

struct Panel {
    double a, b;
    double value, err;
    long index;  // creation order; deterministic tie-break for equal errors
};

struct PanelWorstFirst {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.err != y.err) return x.err < y.err;
        return x.index > y.index;
    }
};

QuadResult integrate_gk_adaptive(const EndpointAwareIntegrand& f, double a, double b, double tol,
                                 const IntegrateOptions& opts) {
    QuadResult out;
    std::priority_queue<Panel, std::vector<Panel>, PanelWorstFirst> queue;
    std::vector<Panel> done;  // intervals no longer subdividable
    long next_index = 0;
    int n_panels = 1;

    PanelEval first = gk15(f, a, b, a, b, out.n_evals);
    double err_total = first.err;
    double value_total = first.value;
    queue.push({a, b, first.value, first.err, next_index++});

    while (n_panels < opts.max_panels && !queue.empty() &&
           err_total > tol * (1.0 + std::abs(value_total))) {
        Panel p = queue.top();
        queue.pop();
        const double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b) {  // exhausted at double resolution
            done.push_back(p);
            continue;
        }
        PanelEval left = gk15(f, p.a, mid, a, b, out.n_evals);
        PanelEval right = gk15(f, mid, p.b, a, b, out.n_evals);
        err_total += left.err + right.err - p.err;
        value_total += left.value + right.value - p.value;
        queue.push({p.a, mid, left.value, left.err, next_index++});
        queue.push({mid, p.b, right.value, right.err, next_index++});
        ++n_panels;
    }

    while (!queue.empty()) {
        done.push_back(queue.top());
        queue.pop();
    }
    // Serial accumulation in interval order, independent of subdivision history.
    std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double value = 0.0, comp = 0.0, err = 0.0;
    for (const Panel& p : done) {
        const double y = p.value - comp;
        const double t = value + y;
        comp = (t - value) - y;
        value = t;
        err += p.err;
    }
    out.value = value;
    out.err_est = err;
    out.converged = err <= tol * (1.0 + std::abs(value));
    return out;
}

// tanh-sinh: x = c + h*tanh((pi/2) sinh t). Offsets from the endpoints are
// computed directly from the transform so integrable endpoint singularities
// can be sampled at distances far below the double resolution of x itself.
QuadResult integrate_tanh_sinh(const EndpointAwareIntegrand& f, double a, double b, double tol,
                               const IntegrateOptions& opts) {
    constexpr double kTMax = 6.0;
    constexpr double kHalfPi = 1.57079632679489661923132169163975144;
    QuadResult out;
    const double hw = 0.5 * (b - a);

    // weight(t) = (pi/2) cosh t / cosh^2((pi/2) sinh t)
    // offset(t) = 1 - tanh((pi/2) sinh t) = 2 / (1 + exp(pi sinh t)), t >= 0
    auto eval_node = [&](double t) -> double {
        const double s = kHalfPi * std::sinh(t);
        const double offset = 2.0 / (1.0 + std::exp(2.0 * s));
        if (offset == 0.0) return 0.0;  // node collapsed onto the endpoint; weight vanished first
        const double ch = std::cosh(s);
        const double w = kHalfPi * std::cosh(t) / (ch * ch);
        if (w == 0.0) return 0.0;
        double contrib = 0.0;
        {
            const double dist_b = hw * offset;  // node near b
            const double x = b - dist_b;
            contrib += w * f(x, (b - a) - dist_b, dist_b);
        }
        if (t > 0.0) {
            const double dist_a = hw * offset;  // mirrored node near a
            const double x = a + dist_a;
            contrib += w * f(x, dist_a, (b - a) - dist_a);
        }
        out.n_evals += (t > 0.0) ? 2 : 1;
        return contrib;
    };

    double h = 1.0;
    double sum = eval_node(0.0);
    for (int i = 1; i <= static_cast<int>(kTMax); ++i) sum += eval_node(static_cast<double>(i));
    double prev = sum * h * hw;
    double last_diff = std::numeric_limits<double>::infinity();

    for (int level = 1; level <= opts.max_levels; ++level) {
        h *= 0.5;
        double add = 0.0, comp = 0.0;
        for (long i = 0;; ++i) {
            const double t = h * static_cast<double>(2 * i + 1);
            if (t > kTMax) break;
            const double y = eval_node(t) - comp;
            const double s = add + y;
            comp = (s - add) - y;
            add = s;
        }
        const double cur = 0.5 * prev + add * h * hw;
        last_diff = std::abs(cur - prev);
        prev = cur;
        if (level >= 3 && last_diff <= tol * (1.0 + std::abs(cur))) {
            out.value = cur;
            out.err_est = std::max(last_diff, kEps * std::abs(cur));
            out.converged = true;
            return out;
        }
    }
    out.value = prev;
    out.err_est = last_diff;
    out.converged = false;
    return out;
}

}  // namespace

QuadResult integrate(const EndpointAwareIntegrand& f, double a, double b, double tol,
                     const IntegrateOptions& opts) {
    if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: requires tol > 0");
    if (opts.endpoint_singular) return integrate_tanh_sinh(f, a, b, tol, opts);
    return integrate_gk_adaptive(f, a, b, tol, opts);
}

QuadResult integrate(const Integrand& f, double a, double b, double tol,
                     const IntegrateOptions& opts) {
    return integrate([&f](double x, double, double) { return f(x); }, a, b, tol, opts);
}

QuadResult integrate(const Integrand& f, double a, double b, double tol) {
    return integrate(f, a, b, tol, IntegrateOptions{});
}

}  // namespace conetrace
