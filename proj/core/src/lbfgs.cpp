// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rankgauge/lbfgs.hpp"

#include "rankgauge/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace rankgauge {

std::string_view to_string(Termination t) {
    switch(t) {
        case Termination::GradientTolerance: return "gradient-tolerance";
        case Termination::LossStagnation: return "loss-stagnation";
        case Termination::NoProgress: return "no-progress";
        case Termination::IterationCap: return "iteration-cap";
        case Termination::Failed: return "failed";
    }
    return "unknown";
}

namespace {

struct Point {
    double  step = 0.0;
    double  f    = 0.0;
    double  dphi = 0.0;
    RVector x;
    RVector g;
};

/// Minimizer of the cubic through (a, fa, da) and (b, fb, db), clamped away from the
/// interval ends; falls back to bisection when the cubic is degenerate.
double cubic_step(double a, double fa, double da, double b, double fb, double db) {
    const double lo = std::min(a, b), hi = std::max(a, b), width = hi - lo;
    const double d1 = da + db - 3.0 * (fa - fb) / (a - b);
    const double disc = d1 * d1 - da * db;
    double       t    = 0.5 * (a + b);
    if(disc >= 0.0) {
        const double d2 = std::copysign(std::sqrt(disc), b - a);
        const double den = db - da + 2.0 * d2;
        if(den != 0.0) {
            const double c = b - (b - a) * (db + d2 - d1) / den;
            if(std::isfinite(c)) t = c;
        }
    }
    return std::clamp(t, lo + 0.1 * width, hi - 0.1 * width);
}

class LineSearch {
  public:
    LineSearch(const GradientObjective &fun, const LbfgsOptions &opts, int &evals) : fun_(fun), opts_(opts), evals_(evals) {}

    /// Returns true with `out` satisfying the strong Wolfe conditions; otherwise
    /// `out` is the lowest point seen (possibly no better than the start).
    bool run(const RVector &x, double f0, const RVector &dir, double dphi0, double step0, Point &out) {
        x_     = &x;
        dir_   = &dir;
        f0_    = f0;
        dphi0_ = dphi0;
        best_  = Point{0.0, f0, dphi0, x, RVector()};

        Point prev{0.0, f0, dphi0, x, RVector()};
        double step = step0;
        for(int it = 0; it < opts_.max_line_search; ++it) {
            Point cur = eval(step);
            if(cur.f > f0_ + opts_.wolfe_c1 * step * dphi0_ || (it > 0 && cur.f >= prev.f)) return zoom(prev, cur, out);
            if(std::abs(cur.dphi) <= -opts_.wolfe_c2 * dphi0_) {
                out = std::move(cur);
                return true;
            }
            if(cur.dphi >= 0.0) return zoom(cur, prev, out);
            prev = std::move(cur);
            step *= 2.0;
        }
        out = best_;
        return false;
    }

  private:
    Point eval(double step) {
        Point p;
        p.step = step;
        p.x    = *x_ + step * *dir_;
        p.f    = fun_(p.x, p.g);
        ++evals_;
        if(!std::isfinite(p.f) || !p.g.allFinite()) {
            // Treat overflow as a wall so the search contracts.
            p.f    = std::numeric_limits<double>::infinity();
            p.dphi = 0.0;
            return p;
        }
        p.dphi = p.g.dot(*dir_);
        if(p.f < best_.f) best_ = p;
        return p;
    }

    bool zoom(Point lo, Point hi, Point &out) {
        for(int it = 0; it < opts_.max_line_search; ++it) {
            if(std::abs(hi.step - lo.step) <= 1e-16 * std::max(1.0, std::abs(lo.step))) break;
            double step;
            if(std::isfinite(hi.f))
                step = cubic_step(lo.step, lo.f, lo.dphi, hi.step, hi.f, hi.dphi);
            else
                step = 0.5 * (lo.step + hi.step);
            Point cur = eval(step);
            if(cur.f > f0_ + opts_.wolfe_c1 * step * dphi0_ || cur.f >= lo.f) {
                hi = std::move(cur);
            } else {
                if(std::abs(cur.dphi) <= -opts_.wolfe_c2 * dphi0_) {
                    out = std::move(cur);
                    return true;
                }
                if(cur.dphi * (hi.step - lo.step) >= 0.0) hi = lo;
                lo = std::move(cur);
            }
        }
        out = best_;
        return false;
    }

    const GradientObjective &fun_;
    const LbfgsOptions      &opts_;
    int                     &evals_;
    const RVector           *x_   = nullptr;
    const RVector           *dir_ = nullptr;
    double                   f0_ = 0.0, dphi0_ = 0.0;
    Point                    best_;
};

} // namespace

LbfgsResult lbfgs_minimize(const GradientObjective &fun, RVector x0, const LbfgsOptions &opts) {
    if(opts.memory < 1 || opts.max_iters < 0 || !(opts.tol_grad > 0.0) || !(opts.tol_loss_rel > 0.0))
        throw UsageError("lbfgs_minimize: invalid options");

    LbfgsResult res;
    res.x     = std::move(x0);
    res.value = fun(res.x, res.gradient);
    res.evaluations = 1;
    if(!std::isfinite(res.value) || !res.gradient.allFinite()) throw Error("lbfgs_minimize: non-finite value at the starting point");
    if(opts.record_history) res.history.push_back(res.value);

    std::deque<RVector> s_hist, y_hist;
    std::deque<double>  rho_hist;
    std::vector<double> alpha(static_cast<std::size_t>(opts.memory));
    LineSearch          search(fun, opts, res.evaluations);
    int                 stagnant = 0;
    RVector             dir;

    for(;;) {
        if(res.gradient.cwiseAbs().maxCoeff() < opts.tol_grad) {
            res.reason = Termination::GradientTolerance;
            return res;
        }
        if(res.iterations >= opts.max_iters) {
            res.reason = Termination::IterationCap;
            return res;
        }

        // Two-loop recursion.
        dir = -res.gradient;
        const std::size_t m = s_hist.size();
        for(std::size_t j = m; j-- > 0;) {
            alpha[j] = rho_hist[j] * s_hist[j].dot(dir);
            dir -= alpha[j] * y_hist[j];
        }
        if(m > 0) dir *= s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
        for(std::size_t j = 0; j < m; ++j) {
            const double beta = rho_hist[j] * y_hist[j].dot(dir);
            dir += (alpha[j] - beta) * s_hist[j];
        }
        double dphi0 = res.gradient.dot(dir);
        if(!(dphi0 < 0.0)) {
            s_hist.clear();
            y_hist.clear();
            rho_hist.clear();
            dir   = -res.gradient;
            dphi0 = -res.gradient.squaredNorm();
        }
        const double step0 = s_hist.empty() ? std::min(1.0, 1.0 / dir.norm()) : 1.0;

        Point      next;
        const bool wolfe = search.run(res.x, res.value, dir, dphi0, step0, next);
        if(!(next.f < res.value)) {
            if(!s_hist.empty()) {
                // Retry from steepest descent with a fresh curvature model.
                s_hist.clear();
                y_hist.clear();
                rho_hist.clear();
                continue;
            }
            res.reason = Termination::NoProgress;
            return res;
        }

        RVector      s  = next.x - res.x;
        RVector      y  = next.g - res.gradient;
        const double sy = s.dot(y);
        if(wolfe && sy > 1e-12 * s.norm() * y.norm()) {
            if(static_cast<int>(s_hist.size()) == opts.memory) {
                s_hist.pop_front();
                y_hist.pop_front();
                rho_hist.pop_front();
            }
            s_hist.push_back(std::move(s));
            y_hist.push_back(std::move(y));
            rho_hist.push_back(1.0 / sy);
        }

        const double rel = std::abs(res.value - next.f) / std::max({std::abs(res.value), std::abs(next.f), 1e-300});
        stagnant         = rel < opts.tol_loss_rel ? stagnant + 1 : 0;

        res.x        = std::move(next.x);
        res.value    = next.f;
        res.gradient = std::move(next.g);
        ++res.iterations;
        if(opts.record_history) res.history.push_back(res.value);

        if(stagnant >= opts.stagnation_window) {
            res.reason = Termination::LossStagnation;
            return res;
        }
    }
}

} // namespace rankgauge
