#include "wirtinger/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wirtinger/errors.hpp"
#include "wirtinger/eval.hpp"

namespace wirtinger {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a) + " and " +
                                std::to_string(b) + " differ");
    }
}

void require_step(real step) {
    if (!(step >= kMinFdStep)) {
        throw StepTooSmall("finite-difference step " + std::to_string(step) + " is below 1e-12");
    }
}

template <class Op>
HVec zip(const HVec& a, const HVec& b, const char* what, Op op) {
    require_same_size(a.size(), b.size(), what);
    std::vector<Complex> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] = op(a[k], b[k]);
    }
    return HVec(std::move(out));
}

template <class Op>
HVec map(const HVec& a, Op op) {
    std::vector<Complex> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] = op(a[k]);
    }
    return HVec(std::move(out));
}

// alpha*a + beta*b, coordinatewise.
HVec axpby(Complex alpha, const HVec& a, Complex beta, const HVec& b, const char* what) {
    return zip(a, b, what, [&](Complex x, Complex y) { return alpha * x + beta * y; });
}

void require_nonpole(Complex w, real pole_floor, const char* what) {
    if (!(std::abs(w) >= pole_floor)) {
        throw PoleError(std::string(what) + ": denominator magnitude below pole floor");
    }
}

} // namespace

HVec::HVec(std::vector<Complex> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw DimensionMismatch("HVec: dimension must be at least 1");
    }
}

HVec HVec::zeros(std::size_t n) {
    return HVec(std::vector<Complex>(n));
}

HVec HVec::unit(std::size_t n, std::size_t k) {
    std::vector<Complex> coords(n);
    coords.at(k) = Complex{1.0, 0.0};
    return HVec(std::move(coords));
}

HVec operator+(const HVec& a, const HVec& b) {
    return zip(a, b, "HVec +", [](Complex x, Complex y) { return x + y; });
}

HVec operator-(const HVec& a, const HVec& b) {
    return zip(a, b, "HVec -", [](Complex x, Complex y) { return x - y; });
}

HVec operator-(const HVec& a) {
    return map(a, [](Complex x) { return -x; });
}

HVec operator*(Complex s, const HVec& a) {
    return map(a, [s](Complex x) { return s * x; });
}

HVec conj(const HVec& a) {
    return map(a, [](Complex x) { return std::conj(x); });
}

Complex inner(const HVec& f, const HVec& g) {
    require_same_size(f.size(), g.size(), "inner");
    Complex sum{};
    for (std::size_t k = 0; k < f.size(); ++k) {
        sum += f[k] * std::conj(g[k]);
    }
    return sum;
}

real norm(const HVec& f) {
    real sum = 0.0;
    for (const Complex x : f.coords()) {
        sum += std::norm(x);
    }
    return std::sqrt(sum);
}

real max_abs_diff(const HVec& a, const HVec& b) {
    require_same_size(a.size(), b.size(), "max_abs_diff");
    real worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

FunctionalJet ip_functional(InnerProductForm form, const HVec& w, const HVec& c) {
    require_same_size(w.size(), c.size(), "ip_functional");
    const HVec zero = HVec::zeros(c.size());
    switch (form) {
    case InnerProductForm::fw:
        return {inner(c, w), conj(w), zero};
    case InnerProductForm::wf:
        return {inner(w, c), zero, w};
    case InnerProductForm::fcw:
        return {inner(conj(c), w), zero, conj(w)};
    case InnerProductForm::wfc:
        return {inner(w, conj(c)), w, zero};
    }
    throw Error("ip_functional: unknown form");
}

FunctionalJet constant_functional(Complex k, std::size_t n) {
    require_finite(k, "constant_functional");
    return {k, HVec::zeros(n), HVec::zeros(n)};
}

FunctionalJet norm_squared_functional(const HVec& c) {
    return {inner(c, c), conj(c), c};
}

FunctionalJet linear_combine(Complex alpha, const FunctionalJet& a, Complex beta, const FunctionalJet& b) {
    return {alpha * a.value + beta * b.value, axpby(alpha, a.grad_f, beta, b.grad_f, "linear_combine"),
            axpby(alpha, a.grad_fc, beta, b.grad_fc, "linear_combine")};
}

FunctionalJet operator+(const FunctionalJet& a, const FunctionalJet& b) {
    return {a.value + b.value, a.grad_f + b.grad_f, a.grad_fc + b.grad_fc};
}

FunctionalJet operator-(const FunctionalJet& a, const FunctionalJet& b) {
    return {a.value - b.value, a.grad_f - b.grad_f, a.grad_fc - b.grad_fc};
}

FunctionalJet operator-(const FunctionalJet& a) {
    return {-a.value, -a.grad_f, -a.grad_fc};
}

FunctionalJet mul(const FunctionalJet& a, const FunctionalJet& b) {
    return {a.value * b.value, axpby(b.value, a.grad_f, a.value, b.grad_f, "mul"),
            axpby(b.value, a.grad_fc, a.value, b.grad_fc, "mul")};
}

FunctionalJet conj(const FunctionalJet& a) {
    return {std::conj(a.value), conj(a.grad_fc), conj(a.grad_f)};
}

FunctionalJet recip(const FunctionalJet& a, real pole_floor) {
    require_nonpole(a.value, pole_floor, "recip");
    const Complex scale = -Complex{1.0, 0.0} / (a.value * a.value);
    return {Complex{1.0, 0.0} / a.value, scale * a.grad_f, scale * a.grad_fc};
}

FunctionalJet div(const FunctionalJet& a, const FunctionalJet& b, real pole_floor) {
    require_nonpole(b.value, pole_floor, "div");
    const Complex sq = b.value * b.value;
    const Complex ca = b.value / sq;
    const Complex cb = -a.value / sq;
    return {a.value / b.value, axpby(ca, a.grad_f, cb, b.grad_f, "div"),
            axpby(ca, a.grad_fc, cb, b.grad_fc, "div")};
}

FunctionalJet outer_chain(const Expr& outer, const FunctionalJet& inner_jet) {
    const WirtingerJet s = eval_first(outer, inner_jet.value);
    // grad_f (T*) = (grad_fc T)*  and  grad_fc (T*) = (grad_f T)*
    return {s.value, axpby(s.dz, inner_jet.grad_f, s.dzc, conj(inner_jet.grad_fc), "outer_chain"),
            axpby(s.dz, inner_jet.grad_fc, s.dzc, conj(inner_jet.grad_f), "outer_chain")};
}

FdGradients fd_gradients(const FunctionalValue& t, const HVec& c, real step) {
    require_step(step);
    const std::size_t n = c.size();
    std::vector<Complex> grad1(n);
    std::vector<Complex> grad2(n);
    std::vector<Complex> probe(c.coords().begin(), c.coords().end());
    const auto at = [&](std::size_t k, Complex delta) {
        probe[k] = c[k] + delta;
        const Complex v = t(HVec(probe));
        probe[k] = c[k];
        return v;
    };
    for (std::size_t k = 0; k < n; ++k) {
        grad1[k] = (at(k, {step, 0.0}) - at(k, {-step, 0.0})) / (2.0 * step);
        grad2[k] = (at(k, {0.0, step}) - at(k, {0.0, -step})) / (2.0 * step);
    }
    return {HVec(std::move(grad1)), HVec(std::move(grad2))};
}

FdWirtingerGradients fd_wirtinger_gradients(const FunctionalValue& t, const HVec& c, real step) {
    const FdGradients g = fd_gradients(t, c, step);
    return {axpby(0.5, g.grad1, -0.5 * kI, g.grad2, "fd_wirtinger_gradients"),
            axpby(0.5, g.grad1, 0.5 * kI, g.grad2, "fd_wirtinger_gradients")};
}

FunctionalClass classify_functional(const FunctionalValue& t, const HVec& c, real step, real tol) {
    const FdWirtingerGradients g = fd_wirtinger_gradients(t, c, step);
    const real cr = norm(g.grad_fc);
    const real conj_cr = norm(g.grad_f);
    return {verdict_from_residuals(cr, conj_cr, tol), cr, conj_cr};
}

VectorJet stack_vector_operator(std::span<const FunctionalJet> components) {
    if (components.empty()) {
        throw DimensionMismatch("stack_vector_operator: no components");
    }
    const std::size_t n = components.front().size();
    for (const FunctionalJet& jet : components) {
        require_same_size(jet.grad_f.size(), n, "stack_vector_operator");
        require_same_size(jet.grad_fc.size(), n, "stack_vector_operator");
    }
    return {std::vector<FunctionalJet>(components.begin(), components.end())};
}

} // namespace wirtinger
