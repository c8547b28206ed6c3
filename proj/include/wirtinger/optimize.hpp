#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "wirtinger/expr.hpp"
#include "wirtinger/hilbert.hpp"
#include "wirtinger/jet.hpp"

namespace wirtinger {

enum class StepMode { fixed, backtracking };

/**
 * Steepest-descent settings. With `backtracking` each step starts at `mu` and
 * shrinks by `shrink` until the Armijo condition
 *   cost(z - t g) <= cost(z) - armijo_c * 2t |g|^2
 * holds, g being the CW-derivative (2|g|^2 is the directional derivative's magnitude).
 */
struct DescentConfig {
    real mu = 0.1;
    real tol = 1e-8;
    int max_iter = 1000;
    StepMode step_mode = StepMode::fixed;
    real shrink = 0.5;
    real armijo_c = 1e-4;

    /// Throws std::invalid_argument unless mu > 0, tol >= 0, max_iter >= 0, 0 < shrink < 1, 0 < armijo_c < 1.
    void validate() const;
};

enum class Termination { converged, max_iter, diverged };

std::string_view to_string(Termination t) noexcept;

/// iterates[n], costs[n] and grad_norms[n] describe iterate n; iterates[0] is the start.
template <class Point>
struct DescentTrace {
    std::vector<Point> iterates;
    std::vector<real> costs;
    std::vector<real> grad_norms;
    Termination termination = Termination::max_iter;

    /// Steps taken.
    std::size_t iterations() const noexcept { return iterates.empty() ? 0 : iterates.size() - 1; }
    const Point& final_point() const { return iterates.back(); }
};

using ScalarTrace = DescentTrace<Complex>;
using HilbertTrace = DescentTrace<HVec>;

/// Cost imaginary part allowed at the start, and while iterating; both relative to max(1, |cost|).
inline constexpr real kInitialRealTol = 1e-10;
inline constexpr real kDriftRealTol = 1e-8;

/// The run stops as diverged once cost exceeds this multiple of |initial cost|.
inline constexpr real kDivergenceFactor = 10.0;

/**
 * Minimise a real-valued cost of one complex variable with
 *   z_n = z_{n-1} - t * dcost/dz*(z_{n-1}).
 * Stops when |dcost/dz*| < tol. Raises NonRealCost when the cost picks up an
 * imaginary part.
 */
ScalarTrace steepest_descent_scalar(const Expr& cost, Complex z0, const DescentConfig& cfg);

/// Same scheme on C^n with the CW-gradient: f_n = f_{n-1} - t * grad_fc T(f_{n-1}).
HilbertTrace steepest_descent_hilbert(const FunctionalProgram& cost, const HVec& f0, const DescentConfig& cfg);

/// Newton increment from the second-order model: solves
///   H (dz, dz*)^T = -(df/dz, df/dz*)^T
/// and returns dz. Raises SingularHessian when |det H| <= 1e-12 * max|H_ij|^2 or
/// when the solved dz* is not conj(dz) to 1e-8.
Complex newton_step_scalar(const Expr& cost, Complex z);

/// Newton iteration with a fixed-mu gradient step wherever the Hessian is singular.
ScalarTrace newton_minimize_scalar(const Expr& cost, Complex z0, const DescentConfig& cfg);

/**
 * Complex least squares. Strict mode fits d_k ~ <x_k, f>; widely-linear mode
 * fits d_k ~ <x_k, a> + <x_k*, b> over the stacked parameter p = (a; b).
 *
 *   T(p) = sum_k |d_k - model_k(p)|^2
 */
class LeastSquaresProblem {
public:
    LeastSquaresProblem(std::vector<HVec> x, std::vector<Complex> d, bool widely_linear);

    std::size_t sample_count() const noexcept { return d_.size(); }
    std::size_t input_dim() const noexcept { return x_.front().size(); }
    /// n in strict mode, 2n in widely-linear mode.
    std::size_t parameter_dim() const noexcept { return widely_linear_ ? 2 * input_dim() : input_dim(); }
    bool widely_linear() const noexcept { return widely_linear_; }

    /// Jet of T at p, assembled from inner-product jets and the product rule.
    FunctionalJet jet(const HVec& p) const;

    /// T(p) by direct summation.
    real cost(const HVec& p) const;

    FunctionalProgram program() const;
    /// 1 / sum_k |regressor_k|^2: a fixed step that never exceeds 1/lambda_max.
    real default_step() const;

private:
    std::vector<HVec> x_;
    std::vector<HVec> regressors_; // x_k, or (x_k; x_k*) in widely-linear mode
    std::vector<Complex> d_;
    bool widely_linear_;
};

/// Throws EmptyData when there are no samples and DimensionMismatch on inconsistent sizes.
LeastSquaresProblem build_least_squares(std::vector<HVec> x, std::vector<Complex> d, bool widely_linear);

/// (a, b) halves of a stacked widely-linear parameter.
std::pair<HVec, HVec> split_widely_linear(const HVec& p);

} // namespace wirtinger
