#include "wirtinger/fd_oracle.hpp"

#include <string>

#include "wirtinger/errors.hpp"
#include "wirtinger/eval.hpp"

namespace wirtinger {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_step(real step) {
    if (!(step >= kMinFdStep)) {
        throw StepTooSmall("finite-difference step " + std::to_string(step) + " is below 1e-12");
    }
}

} // namespace

std::string_view to_string(Holomorphy h) noexcept {
    switch (h) {
    case Holomorphy::holomorphic:
        return "Holomorphic";
    case Holomorphy::conjugate_holomorphic:
        return "ConjugateHolomorphic";
    case Holomorphy::both:
        return "Both";
    case Holomorphy::neither:
        return "Neither";
    }
    return "?";
}

FdPartials fd_partials(const ScalarFunction& f, Complex c, real step) {
    require_step(step);
    const Complex sx{step, 0.0};
    const Complex sy{0.0, step};
    const Complex fx = (f(c + sx) - f(c - sx)) / (2.0 * step);
    const Complex fy = (f(c + sy) - f(c - sy)) / (2.0 * step);
    return {fx, fy};
}

FdWirtinger fd_wirtinger(const ScalarFunction& f, Complex c, real step) {
    const FdPartials p = fd_partials(f, c, step);
    return {0.5 * (p.fx - kI * p.fy), 0.5 * (p.fx + kI * p.fy)};
}

Holomorphy verdict_from_residuals(real cr_residual, real conj_cr_residual, real tol) noexcept {
    const bool cr = cr_residual < tol;
    const bool conj_cr = conj_cr_residual < tol;
    if (cr && conj_cr) {
        return Holomorphy::both;
    }
    if (cr) {
        return Holomorphy::holomorphic;
    }
    if (conj_cr) {
        return Holomorphy::conjugate_holomorphic;
    }
    return Holomorphy::neither;
}

HolomorphyClass classify(const ScalarFunction& f, Complex c, real step, real tol) {
    const FdWirtinger d = fd_wirtinger(f, c, step);
    const real cr = std::abs(d.cw);
    const real conj_cr = std::abs(d.w);
    return {verdict_from_residuals(cr, conj_cr, tol), cr, conj_cr, d};
}

ScalarFunction as_function(const Expr& e) {
    return [e](Complex z) { return eval_value(e, z); };
}

HolomorphyClass classify(const Expr& e, Complex c, real step, real tol) {
    // Domain check only; the jet itself is discarded.
    (void)eval_first(e, c);
    return classify(as_function(e), c, step, tol);
}

} // namespace wirtinger
