#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wirtinger/expr.hpp"
#include "wirtinger/fd_oracle.hpp"
#include "wirtinger/jet.hpp"

namespace wirtinger {

/**
 * An element f = u + iv of the complex Hilbert space C^n, with u, v in R^n.
 * The length is fixed at construction and is at least one.
 */
class HVec {
public:
    /// Throws DimensionMismatch for an empty coordinate list.
    explicit HVec(std::vector<Complex> coords);
    HVec(std::initializer_list<Complex> coords) : HVec(std::vector<Complex>(coords)) {}

    static HVec zeros(std::size_t n);
    /// The k-th unit vector of C^n.
    static HVec unit(std::size_t n, std::size_t k);

    std::size_t size() const noexcept { return coords_.size(); }
    const Complex& operator[](std::size_t k) const { return coords_[k]; }
    std::span<const Complex> coords() const noexcept { return coords_; }

    friend bool operator==(const HVec&, const HVec&) = default;

private:
    std::vector<Complex> coords_;
};

HVec operator+(const HVec& a, const HVec& b);
HVec operator-(const HVec& a, const HVec& b);
HVec operator-(const HVec& a);
HVec operator*(Complex s, const HVec& a);
HVec conj(const HVec& a);

/// <f, g> = sum_k f_k g_k*: linear in the first argument, conjugate-linear in the second.
Complex inner(const HVec& f, const HVec& g);

/// sqrt(<f, f>).
real norm(const HVec& f);

/// Largest componentwise |a_k - b_k|.
real max_abs_diff(const HVec& a, const HVec& b);

/**
 * Jet of a scalar functional T: C^n -> C at a point c. `grad_f` is the
 * W-gradient (dT/df_k per coordinate) and `grad_fc` the CW-gradient
 * (dT/df_k*), so that
 *
 *   T(c + h) = T(c) + <h, grad_f*> + <h*, grad_fc*> + o(|h|).
 */
struct FunctionalJet {
    Complex value{};
    HVec grad_f;
    HVec grad_fc;

    std::size_t size() const noexcept { return grad_f.size(); }

    friend bool operator==(const FunctionalJet&, const FunctionalJet&) = default;
};

/// The four inner-product functionals with closed-form gradients:
/// fw = <f, w>, wf = <w, f>, fcw = <f*, w>, wfc = <w, f*>.
enum class InnerProductForm { fw, wf, fcw, wfc };

FunctionalJet ip_functional(InnerProductForm form, const HVec& w, const HVec& c);

/// T(f) = k on C^n.
FunctionalJet constant_functional(Complex k, std::size_t n);

/// T(f) = <f, f> at c.
FunctionalJet norm_squared_functional(const HVec& c);

FunctionalJet linear_combine(Complex alpha, const FunctionalJet& a, Complex beta, const FunctionalJet& b);
FunctionalJet mul(const FunctionalJet& a, const FunctionalJet& b);
/// Swaps the two gradients and conjugates them.
FunctionalJet conj(const FunctionalJet& a);
FunctionalJet recip(const FunctionalJet& a, real pole_floor = kDefaultPoleFloor);
FunctionalJet div(const FunctionalJet& a, const FunctionalJet& b, real pole_floor = kDefaultPoleFloor);

/// S o T for a scalar outer function S given as an expression in z.
FunctionalJet outer_chain(const Expr& outer, const FunctionalJet& inner_jet);

FunctionalJet operator+(const FunctionalJet& a, const FunctionalJet& b);
FunctionalJet operator-(const FunctionalJet& a, const FunctionalJet& b);
FunctionalJet operator-(const FunctionalJet& a);
inline FunctionalJet operator*(const FunctionalJet& a, const FunctionalJet& b) { return mul(a, b); }
inline FunctionalJet operator/(const FunctionalJet& a, const FunctionalJet& b) { return div(a, b); }

/// A functional evaluated as a jet at a point.
using FunctionalProgram = std::function<FunctionalJet(const HVec&)>;

/// A functional evaluated as a plain value; what the finite-difference oracle sees.
using FunctionalValue = std::function<Complex(const HVec&)>;

/// Coordinatewise central differences: grad1[k] = dT/dx_k and grad2[k] = dT/dy_k,
/// each complex (the T1 and T2 parts combined as T1 + i T2).
struct FdGradients {
    HVec grad1;
    HVec grad2;
};

FdGradients fd_gradients(const FunctionalValue& t, const HVec& c, real step = kDefaultFdStep);

/// W- and CW-gradients rebuilt from fd_gradients: (grad1 -+ i grad2) / 2.
struct FdWirtingerGradients {
    HVec grad_f;
    HVec grad_fc;
};

FdWirtingerGradients fd_wirtinger_gradients(const FunctionalValue& t, const HVec& c, real step = kDefaultFdStep);

/// Fréchet Cauchy-Riemann classification: cr_residual = |grad_fc|, conj_cr_residual = |grad_f|.
struct FunctionalClass {
    Holomorphy verdict = Holomorphy::neither;
    real cr_residual = 0.0;
    real conj_cr_residual = 0.0;
};

FunctionalClass classify_functional(const FunctionalValue& t, const HVec& c, real step = kDefaultFdStep,
                                    real tol = kDefaultClassifyTol);

/// Gradient representation of a C^m-valued operator: one jet per output component.
struct VectorJet {
    std::vector<FunctionalJet> rows;
};

/// Throws DimensionMismatch for an empty list or components over different spaces.
VectorJet stack_vector_operator(std::span<const FunctionalJet> components);

} // namespace wirtinger
