#include "wirtinger/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "wirtinger/errors.hpp"
#include "wirtinger/eval.hpp"
#include "wirtinger/second_order.hpp"

namespace wirtinger {

namespace {

// Line search gives up after this many halvings.
constexpr int kMaxBacktracks = 60;

real checked_real(Complex cost, real tol) {
    if (std::abs(cost.imag()) > tol * std::max(1.0, std::abs(cost.real()))) {
        throw NonRealCost("cost has imaginary part " + std::to_string(cost.imag()));
    }
    return cost.real();
}

template <class Point, class Grad>
struct Sample {
    real cost = 0.0;
    Grad grad;
    real grad_norm = 0.0;
};

// Shared descent loop. `Problem` provides
//   std::optional<Sample> sample(const Point&, real real_tol)  (nullopt when the cost overflowed)
//   Point step(const Point&, const Grad&, real t)
template <class Point, class Grad, class Problem>
DescentTrace<Point> descend(const Problem& problem, const Point& start, const DescentConfig& cfg) {
    cfg.validate();
    DescentTrace<Point> trace;
    std::optional<Sample<Point, Grad>> current = problem.sample(start, kInitialRealTol);
    if (!current) {
        throw NonFiniteError("descent: cost is not finite at the starting point");
    }
    const real initial = current->cost;
    const real ceiling = kDivergenceFactor * (initial != 0.0 ? std::abs(initial) : 1.0);
    Point point = start;

    for (int n = 0;; ++n) {
        trace.iterates.push_back(point);
        trace.costs.push_back(current->cost);
        trace.grad_norms.push_back(current->grad_norm);
        if (current->grad_norm < cfg.tol) {
            trace.termination = Termination::converged;
            return trace;
        }
        if (n > 0 && current->cost > ceiling) {
            trace.termination = Termination::diverged;
            return trace;
        }
        if (n >= cfg.max_iter) {
            trace.termination = Termination::max_iter;
            return trace;
        }

        real t = cfg.mu;
        Point next = problem.step(point, current->grad, t);
        std::optional<Sample<Point, Grad>> candidate = problem.sample(next, kDriftRealTol);
        if (cfg.step_mode == StepMode::backtracking) {
            const real slope = 2.0 * current->grad_norm * current->grad_norm;
            int tries = 0;
            while (!candidate || candidate->cost > current->cost - cfg.armijo_c * t * slope) {
                if (++tries > kMaxBacktracks) {
                    // No acceptable step: the gradient is below what the cost can resolve.
                    trace.termination = Termination::max_iter;
                    return trace;
                }
                t *= cfg.shrink;
                next = problem.step(point, current->grad, t);
                candidate = problem.sample(next, kDriftRealTol);
            }
        }
        if (!candidate) {
            trace.termination = Termination::diverged;
            return trace;
        }
        point = std::move(next);
        current = std::move(candidate);
    }
}

struct ScalarProblem {
    const Expr& cost;

    std::optional<Sample<Complex, Complex>> sample(Complex z, real real_tol) const {
        WirtingerJet j;
        try {
            j = eval_first(cost, z);
        } catch (const NonFiniteError&) {
            return std::nullopt;
        }
        return Sample<Complex, Complex>{checked_real(j.value, real_tol), j.dzc, std::abs(j.dzc)};
    }

    Complex step(Complex z, Complex grad, real t) const { return z - t * grad; }
};

struct HilbertProblem {
    const FunctionalProgram& cost;

    std::optional<Sample<HVec, HVec>> sample(const HVec& f, real real_tol) const {
        FunctionalJet j = cost(f);
        if (!is_finite(j.value)) {
            return std::nullopt;
        }
        for (const Complex g : j.grad_fc.coords()) {
            if (!is_finite(g)) {
                return std::nullopt;
            }
        }
        const real g = norm(j.grad_fc);
        return Sample<HVec, HVec>{checked_real(j.value, real_tol), std::move(j.grad_fc), g};
    }

    HVec step(const HVec& f, const HVec& grad, real t) const { return f - Complex{t, 0.0} * grad; }
};

} // namespace

void DescentConfig::validate() const {
    if (!(mu > 0.0)) {
        throw std::invalid_argument("DescentConfig: mu must be positive");
    }
    if (!(tol >= 0.0)) {
        throw std::invalid_argument("DescentConfig: tol must be non-negative");
    }
    if (max_iter < 0) {
        throw std::invalid_argument("DescentConfig: max_iter must be non-negative");
    }
    if (!(shrink > 0.0 && shrink < 1.0)) {
        throw std::invalid_argument("DescentConfig: shrink must lie in (0, 1)");
    }
    if (!(armijo_c > 0.0 && armijo_c < 1.0)) {
        throw std::invalid_argument("DescentConfig: armijo_c must lie in (0, 1)");
    }
}

std::string_view to_string(Termination t) noexcept {
    switch (t) {
    case Termination::converged:
        return "Converged";
    case Termination::max_iter:
        return "MaxIter";
    case Termination::diverged:
        return "Diverged";
    }
    return "?";
}

ScalarTrace steepest_descent_scalar(const Expr& cost, Complex z0, const DescentConfig& cfg) {
    return descend<Complex, Complex>(ScalarProblem{cost}, z0, cfg);
}

HilbertTrace steepest_descent_hilbert(const FunctionalProgram& cost, const HVec& f0, const DescentConfig& cfg) {
    return descend<HVec, HVec>(HilbertProblem{cost}, f0, cfg);
}

Complex newton_step_scalar(const Expr& cost, Complex z) {
    const SecondOrderJet jet = propagate_second_order(cost, z);
    checked_real(jet.value, kInitialRealTol);
    const HessianBlock hb = hessian_block(jet);
    const auto& h = hb.h;
    const Complex det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
    real scale = 0.0;
    for (const auto& row : h) {
        for (const Complex entry : row) {
            scale = std::max(scale, std::norm(entry));
        }
    }
    if (!(std::abs(det) > 1e-12 * scale)) {
        throw SingularHessian("newton_step_scalar: Hessian block is singular");
    }
    const Complex b0 = -hb.dz;
    const Complex b1 = -hb.dzc;
    const Complex step = (b0 * h[1][1] - h[0][1] * b1) / det;
    const Complex step_conj = (h[0][0] * b1 - h[1][0] * b0) / det;
    if (std::abs(step_conj - std::conj(step)) > 1e-8 * (1.0 + std::abs(step))) {
        throw SingularHessian("newton_step_scalar: solved increments are not a conjugate pair");
    }
    return step;
}

ScalarTrace newton_minimize_scalar(const Expr& cost, Complex z0, const DescentConfig& cfg) {
    cfg.validate();
    ScalarTrace trace;
    Complex z = z0;
    for (int n = 0;; ++n) {
        const WirtingerJet j = eval_first(cost, z);
        trace.iterates.push_back(z);
        trace.costs.push_back(checked_real(j.value, n == 0 ? kInitialRealTol : kDriftRealTol));
        trace.grad_norms.push_back(std::abs(j.dzc));
        if (trace.grad_norms.back() < cfg.tol) {
            trace.termination = Termination::converged;
            return trace;
        }
        const real initial = trace.costs.front();
        if (n > 0 && trace.costs.back() > kDivergenceFactor * (initial != 0.0 ? std::abs(initial) : 1.0)) {
            trace.termination = Termination::diverged;
            return trace;
        }
        if (n >= cfg.max_iter) {
            trace.termination = Termination::max_iter;
            return trace;
        }
        try {
            z += newton_step_scalar(cost, z);
        } catch (const SingularHessian&) {
            z -= cfg.mu * j.dzc;
        } catch (const UnsupportedPrimitive&) {
            z -= cfg.mu * j.dzc;
        }
    }
}

LeastSquaresProblem::LeastSquaresProblem(std::vector<HVec> x, std::vector<Complex> d, bool widely_linear)
    : x_(std::move(x)), d_(std::move(d)), widely_linear_(widely_linear) {
    if (x_.empty() || d_.empty()) {
        throw EmptyData("least squares: no samples");
    }
    if (x_.size() != d_.size()) {
        throw DimensionMismatch("least squares: " + std::to_string(x_.size()) + " inputs but " +
                                std::to_string(d_.size()) + " targets");
    }
    const std::size_t n = x_.front().size();
    regressors_.reserve(x_.size());
    for (const HVec& xk : x_) {
        if (xk.size() != n) {
            throw DimensionMismatch("least squares: inputs have different dimensions");
        }
        if (widely_linear_) {
            std::vector<Complex> stacked(xk.coords().begin(), xk.coords().end());
            for (const Complex v : xk.coords()) {
                stacked.push_back(std::conj(v));
            }
            regressors_.emplace_back(std::move(stacked));
        } else {
            regressors_.push_back(xk);
        }
    }
    for (const Complex dk : d_) {
        require_finite(dk, "least squares target");
    }
}

FunctionalJet LeastSquaresProblem::jet(const HVec& p) const {
    if (p.size() != parameter_dim()) {
        throw DimensionMismatch("least squares: parameter has dimension " + std::to_string(p.size()) +
                                ", expected " + std::to_string(parameter_dim()));
    }
    FunctionalJet total = constant_functional(Complex{}, p.size());
    for (std::size_t k = 0; k < d_.size(); ++k) {
        // <x_k, a> + <x_k*, b> is <(x_k; x_k*), p> in the stacked space.
        const FunctionalJet residual =
            constant_functional(d_[k], p.size()) - ip_functional(InnerProductForm::wf, regressors_[k], p);
        total = total + mul(residual, conj(residual));
    }
    return total;
}

real LeastSquaresProblem::cost(const HVec& p) const {
    if (p.size() != parameter_dim()) {
        throw DimensionMismatch("least squares: parameter dimension mismatch");
    }
    real sum = 0.0;
    for (std::size_t k = 0; k < d_.size(); ++k) {
        sum += std::norm(d_[k] - inner(regressors_[k], p));
    }
    return sum;
}

FunctionalProgram LeastSquaresProblem::program() const {
    return [problem = *this](const HVec& p) { return problem.jet(p); };
}

real LeastSquaresProblem::default_step() const {
    real total = 0.0;
    for (const HVec& r : regressors_) {
        total += norm(r) * norm(r);
    }
    return total > 0.0 ? 1.0 / total : 1.0;
}

LeastSquaresProblem build_least_squares(std::vector<HVec> x, std::vector<Complex> d, bool widely_linear) {
    return LeastSquaresProblem(std::move(x), std::move(d), widely_linear);
}

std::pair<HVec, HVec> split_widely_linear(const HVec& p) {
    if (p.size() % 2 != 0) {
        throw DimensionMismatch("split_widely_linear: odd dimension");
    }
    const std::size_t n = p.size() / 2;
    const auto coords = p.coords();
    return {HVec(std::vector<Complex>(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(n))),
            HVec(std::vector<Complex>(coords.begin() + static_cast<std::ptrdiff_t>(n), coords.end()))};
}

} // namespace wirtinger
