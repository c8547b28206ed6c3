#pragma once

#include <array>

#include "wirtinger/jet.hpp"

namespace wirtinger {

/**
 * Second-order Wirtinger jet. Besides the first-order slots it stores the four
 * second partials
 *
 *   dzz   = d/dz  (df/dz)      dzzc  = d/dz  (df/dz*)
 *   dzcz  = d/dz* (df/dz)      dzczc = d/dz* (df/dz*)
 *
 * dzzc and dzcz are propagated independently; they agree for C^2 inputs.
 * The first-order slots are computed with exactly the same arithmetic as
 * WirtingerJet, so first_order() is bitwise equal to the first-order result.
 */
struct SecondOrderJet {
    Complex value{};
    Complex dz{};
    Complex dzc{};
    Complex dzz{};
    Complex dzzc{};
    Complex dzcz{};
    Complex dzczc{};

    WirtingerJet first_order() const noexcept { return {value, dz, dzc}; }

    friend bool operator==(const SecondOrderJet&, const SecondOrderJet&) = default;
};

/// Gradient pair and the 2x2 block [[dzz, dzzc], [dzcz, dzczc]] at a point.
struct HessianBlock {
    Complex dz{};
    Complex dzc{};
    std::array<std::array<Complex, 2>, 2> h{};
};

SecondOrderJet seed_variable2(Complex c);
SecondOrderJet constant2(Complex k);

SecondOrderJet linear_combine(Complex alpha, const SecondOrderJet& a, Complex beta, const SecondOrderJet& b);
SecondOrderJet mul(const SecondOrderJet& a, const SecondOrderJet& b);
SecondOrderJet conj(const SecondOrderJet& a);
SecondOrderJet recip(const SecondOrderJet& a, real pole_floor = kDefaultPoleFloor);
SecondOrderJet div(const SecondOrderJet& a, const SecondOrderJet& b, real pole_floor = kDefaultPoleFloor);
SecondOrderJet apply_primitive(PrimitiveKind g, const SecondOrderJet& a, real pole_floor = kDefaultPoleFloor);

SecondOrderJet operator+(const SecondOrderJet& a, const SecondOrderJet& b);
SecondOrderJet operator-(const SecondOrderJet& a, const SecondOrderJet& b);
SecondOrderJet operator-(const SecondOrderJet& a);
inline SecondOrderJet operator*(const SecondOrderJet& a, const SecondOrderJet& b) { return mul(a, b); }
inline SecondOrderJet operator/(const SecondOrderJet& a, const SecondOrderJet& b) { return div(a, b); }

HessianBlock hessian_block(const SecondOrderJet& jet) noexcept;

/// f(c) + (dz, dzc).(h, h*) + 1/2 (h, h*) H (h, h*)^T with every quantity taken from `jet`.
Complex second_order_taylor(const SecondOrderJet& jet, Complex h) noexcept;

/// |dzzc - dzcz| relative to 1 + |dzzc|; small for C^2 inputs.
real mixed_partial_asymmetry(const SecondOrderJet& jet) noexcept;

} // namespace wirtinger
