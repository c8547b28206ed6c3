#pragma once

#include <functional>
#include <string_view>

#include "wirtinger/expr.hpp"
#include "wirtinger/jet.hpp"

namespace wirtinger {

/// A pure scalar function. Probes may be evaluated in any order.
using ScalarFunction = std::function<Complex(Complex)>;

/// Central-difference partials df/dx and df/dy (each complex).
struct FdPartials {
    Complex fx{};
    Complex fy{};
};

/// W- and CW-derivative estimates.
struct FdWirtinger {
    Complex w{};
    Complex cw{};
};

enum class Holomorphy { holomorphic, conjugate_holomorphic, both, neither };

std::string_view to_string(Holomorphy h) noexcept;

/**
 * Verdict of the Cauchy-Riemann test together with its evidence.
 * `cr_residual` is |CW| (zero iff the CR conditions hold) and
 * `conj_cr_residual` is |W| (zero iff the conjugate CR conditions hold).
 */
struct HolomorphyClass {
    Holomorphy verdict = Holomorphy::neither;
    real cr_residual = 0.0;
    real conj_cr_residual = 0.0;
    FdWirtinger derivatives{};
};

/// fx = (f(c+s) - f(c-s)) / 2s,  fy = (f(c+is) - f(c-is)) / 2s. StepTooSmall below 1e-12.
FdPartials fd_partials(const ScalarFunction& f, Complex c, real step = kDefaultFdStep);

/// W = (fx - i fy)/2,  CW = (fx + i fy)/2.
FdWirtinger fd_wirtinger(const ScalarFunction& f, Complex c, real step = kDefaultFdStep);

/// Threshold both residuals against `tol`.
HolomorphyClass classify(const ScalarFunction& f, Complex c, real step = kDefaultFdStep,
                         real tol = kDefaultClassifyTol);

/// Wrap an expression as a ScalarFunction (plain complex evaluation, no jets).
ScalarFunction as_function(const Expr& e);

/**
 * Classify an expression. Before probing, the expression is checked for real
 * differentiability at `c`; a non-differentiable point (abs or arg at 0, say)
 * surfaces as DomainError instead of a verdict.
 */
HolomorphyClass classify(const Expr& e, Complex c, real step = kDefaultFdStep, real tol = kDefaultClassifyTol);

/// Map residuals to a verdict.
Holomorphy verdict_from_residuals(real cr_residual, real conj_cr_residual, real tol) noexcept;

} // namespace wirtinger
