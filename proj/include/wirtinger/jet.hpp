#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string_view>

#include "wirtinger/config.hpp"

namespace wirtinger {

using Complex = std::complex<real>;

/// True when both components are finite.
inline bool is_finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Throws NonFiniteError when `z` has a NaN or infinite component.
void require_finite(Complex z, std::string_view what);

/**
 * First-order Wirtinger jet: the value f(c) together with the W-derivative
 * df/dz(c) and the CW-derivative df/dz*(c).
 *
 * Jets do not record the point they were computed at. Combining jets taken at
 * different points is a caller error and is not detected.
 */
struct WirtingerJet {
    Complex value{};
    Complex dz{};
    Complex dzc{};

    friend bool operator==(const WirtingerJet&, const WirtingerJet&) = default;
};

/// The identity z -> z at `c`: (c, 1, 0).
WirtingerJet seed_variable(Complex c);

/// A constant function: (k, 0, 0).
WirtingerJet constant(Complex k);

/// alpha*a + beta*b, applied slot by slot.
WirtingerJet linear_combine(Complex alpha, const WirtingerJet& a, Complex beta, const WirtingerJet& b);

WirtingerJet mul(const WirtingerJet& a, const WirtingerJet& b);

/// Conjugation swaps and conjugates the two derivative slots.
WirtingerJet conj(const WirtingerJet& a);

WirtingerJet recip(const WirtingerJet& a, real pole_floor = kDefaultPoleFloor);

WirtingerJet div(const WirtingerJet& a, const WirtingerJet& b, real pole_floor = kDefaultPoleFloor);

inline WirtingerJet operator+(const WirtingerJet& a, const WirtingerJet& b) {
    return {a.value + b.value, a.dz + b.dz, a.dzc + b.dzc};
}
inline WirtingerJet operator-(const WirtingerJet& a, const WirtingerJet& b) {
    return {a.value - b.value, a.dz - b.dz, a.dzc - b.dzc};
}
inline WirtingerJet operator-(const WirtingerJet& a) { return {-a.value, -a.dz, -a.dzc}; }
inline WirtingerJet operator*(const WirtingerJet& a, const WirtingerJet& b) { return mul(a, b); }
inline WirtingerJet operator/(const WirtingerJet& a, const WirtingerJet& b) { return div(a, b); }

// ---------------------------------------------------------------------------
// Primitives
// ---------------------------------------------------------------------------

enum class Primitive { exp, log, sin, cos, pow_int, sqrt, conj, re, im, abs, abs2, arg };

/// A scalar primitive g: C -> C. `exponent` is only meaningful for pow_int.
struct PrimitiveKind {
    Primitive tag = Primitive::exp;
    int exponent = 0;

    static constexpr PrimitiveKind of(Primitive p) noexcept { return {p, 0}; }
    static constexpr PrimitiveKind power(int k) noexcept { return {Primitive::pow_int, k}; }

    /// Holomorphic primitives have a CW-partial that is identically zero.
    constexpr bool holomorphic() const noexcept {
        switch (tag) {
        case Primitive::exp:
        case Primitive::log:
        case Primitive::sin:
        case Primitive::cos:
        case Primitive::pow_int:
        case Primitive::sqrt:
            return true;
        default:
            return false;
        }
    }

    friend constexpr bool operator==(const PrimitiveKind&, const PrimitiveKind&) = default;
};

/// Name used in expression text ("exp", "abs2", ...). pow_int has no call syntax.
std::string_view primitive_name(Primitive p) noexcept;

/// Reverse of primitive_name for callable primitives; nullopt for unknown names.
std::optional<Primitive> primitive_from_name(std::string_view name) noexcept;

/**
 * A primitive g viewed as a function G(p, q) of two formal variables
 * evaluated at p = w, q = w*. `dz` is dG/dp and `dzc` is dG/dq, so for the
 * identity p the pair is (1, 0) and for conj it is (0, 1).
 */
struct PrimitivePartials {
    Complex value{};
    Complex dz{};
    Complex dzc{};
};

/// Second partials of G(p, q). G is smooth in both arguments so one mixed slot suffices.
struct PrimitiveSecondPartials {
    Complex value{};
    Complex dz{};
    Complex dzc{};
    Complex dzz{};
    Complex dzzc{};
    Complex dzczc{};
};

/// k-th power by repeated squaring. Negative k divides; |w| below `pole_floor` is a PoleError then.
Complex int_power(Complex w, int k, real pole_floor = kDefaultPoleFloor);

/// g(w). Principal branches for log, sqrt and arg. log(0) and arg(0) raise DomainError.
Complex primitive_value(PrimitiveKind g, Complex w, real pole_floor = kDefaultPoleFloor);

/// First partials of g at w. Raises DomainError where g is not differentiable
/// in the real sense (log, sqrt, abs and arg at 0).
PrimitivePartials primitive_partials(PrimitiveKind g, Complex w, real pole_floor = kDefaultPoleFloor);

/// Second partials of g at w. abs has no second-order rule (UnsupportedPrimitive).
PrimitiveSecondPartials primitive_second_partials(PrimitiveKind g, Complex w,
                                                  real pole_floor = kDefaultPoleFloor);

/// Chain rule: (g o a) from the partials of g at a.value and the jet a.
WirtingerJet apply_primitive(PrimitiveKind g, const WirtingerJet& a, real pole_floor = kDefaultPoleFloor);

} // namespace wirtinger
