#include "cosp/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "cosp/errors.hpp"

namespace cosp {

namespace {

struct Rule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Gauss-Legendre nodes by Newton iteration on P_n.
Rule make_rule(int n) {
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double wgt = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = wgt;
        r.weights[n - 1 - i] = wgt;
    }
    return r;
}

const Rule& rule20() {
    static const Rule r = make_rule(20);
    return r;
}
const Rule& rule41() {
    static const Rule r = make_rule(41);
    return r;
}

double apply(const Rule& r, const std::function<double(double)>& f, double lo, double hi) {
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    double acc = 0.0;
    for (size_t i = 0; i < r.nodes.size(); ++i) acc += r.weights[i] * f(mid + half * r.nodes[i]);
    return acc * half;
}

struct Panel {
    double lo, hi, value, err;
};

struct ByError {
    bool operator()(const Panel& a, const Panel& b) const { return a.err < b.err; }
};

Panel evaluate(const std::function<double(double)>& f, double lo, double hi) {
    const double coarse = apply(rule20(), f, lo, hi);
    const double fine = apply(rule41(), f, lo, hi);
    return {lo, hi, fine, std::abs(fine - coarse)};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              double abs_tol, long max_evaluations) {
    if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi))
        throw ValidationError("integrate_adaptive: bad interval");
    if (!(abs_tol > 0.0)) throw ValidationError("integrate_adaptive: abs_tol must be > 0");

    std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
    long evals = 61;
    heap.push(evaluate(f, lo, hi));
    double total_err = heap.top().err;

    const double min_width = 1e-14 * (hi - lo);
    while (total_err > abs_tol) {
        if (evals + 122 > max_evaluations)
            throw OracleConvergenceError("integrate_adaptive: node budget exhausted");
        Panel worst = heap.top();
        heap.pop();
        if (worst.hi - worst.lo < min_width)
            throw OracleConvergenceError("integrate_adaptive: panel width underflow");
        const double mid = 0.5 * (worst.lo + worst.hi);
        Panel left = evaluate(f, worst.lo, mid);
        Panel right = evaluate(f, mid, worst.hi);
        evals += 122;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }

    // compensated sum of panel values
    double sum = 0.0, comp = 0.0, err = 0.0;
    while (!heap.empty()) {
        const Panel& p = heap.top();
        double y = p.value - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        err += p.err;
        heap.pop();
    }
    return {sum, err, evals};
}

}  // namespace cosp
