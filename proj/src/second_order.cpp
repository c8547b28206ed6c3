#include "wirtinger/second_order.hpp"

namespace wirtinger {

namespace {

// h = G(p, q) for jets p and q, given the partials of G at (p.value, q.value).
// Second slots only; callers fill value and first-order slots themselves.
void chain_second(const PrimitiveSecondPartials& g, const SecondOrderJet& p, const SecondOrderJet& q,
                  SecondOrderJet& out) {
    const Complex gp = g.dz;
    const Complex gq = g.dzc;
    const Complex gpp = g.dzz;
    const Complex gpq = g.dzzc;
    const Complex gqq = g.dzczc;
    out.dzz = gpp * p.dz * p.dz + 2.0 * gpq * p.dz * q.dz + gqq * q.dz * q.dz + gp * p.dzz + gq * q.dzz;
    out.dzzc = (gpp * p.dz + gpq * q.dz) * p.dzc + gp * p.dzzc + (gpq * p.dz + gqq * q.dz) * q.dzc + gq * q.dzzc;
    out.dzcz = (gpp * p.dzc + gpq * q.dzc) * p.dz + gp * p.dzcz + (gpq * p.dzc + gqq * q.dzc) * q.dz + gq * q.dzcz;
    out.dzczc =
        gpp * p.dzc * p.dzc + 2.0 * gpq * p.dzc * q.dzc + gqq * q.dzc * q.dzc + gp * p.dzczc + gq * q.dzczc;
}

// Second slots of a product, from the Leibniz rule.
void product_second(const SecondOrderJet& a, const SecondOrderJet& b, SecondOrderJet& out) {
    out.dzz = a.dzz * b.value + 2.0 * a.dz * b.dz + a.value * b.dzz;
    out.dzzc = a.dzzc * b.value + a.dzc * b.dz + a.dz * b.dzc + a.value * b.dzzc;
    out.dzcz = a.dzcz * b.value + a.dz * b.dzc + a.dzc * b.dz + a.value * b.dzcz;
    out.dzczc = a.dzczc * b.value + 2.0 * a.dzc * b.dzc + a.value * b.dzczc;
}

} // namespace

SecondOrderJet seed_variable2(Complex c) {
    const WirtingerJet j = seed_variable(c);
    return {j.value, j.dz, j.dzc, {}, {}, {}, {}};
}

SecondOrderJet constant2(Complex k) {
    const WirtingerJet j = constant(k);
    return {j.value, j.dz, j.dzc, {}, {}, {}, {}};
}

SecondOrderJet linear_combine(Complex alpha, const SecondOrderJet& a, Complex beta, const SecondOrderJet& b) {
    return {alpha * a.value + beta * b.value, alpha * a.dz + beta * b.dz,       alpha * a.dzc + beta * b.dzc,
            alpha * a.dzz + beta * b.dzz,     alpha * a.dzzc + beta * b.dzzc,   alpha * a.dzcz + beta * b.dzcz,
            alpha * a.dzczc + beta * b.dzczc};
}

SecondOrderJet operator+(const SecondOrderJet& a, const SecondOrderJet& b) {
    return {a.value + b.value, a.dz + b.dz,     a.dzc + b.dzc,    a.dzz + b.dzz,
            a.dzzc + b.dzzc,   a.dzcz + b.dzcz, a.dzczc + b.dzczc};
}

SecondOrderJet operator-(const SecondOrderJet& a, const SecondOrderJet& b) {
    return {a.value - b.value, a.dz - b.dz,     a.dzc - b.dzc,    a.dzz - b.dzz,
            a.dzzc - b.dzzc,   a.dzcz - b.dzcz, a.dzczc - b.dzczc};
}

SecondOrderJet operator-(const SecondOrderJet& a) {
    return {-a.value, -a.dz, -a.dzc, -a.dzz, -a.dzzc, -a.dzcz, -a.dzczc};
}

SecondOrderJet mul(const SecondOrderJet& a, const SecondOrderJet& b) {
    const WirtingerJet first = mul(a.first_order(), b.first_order());
    SecondOrderJet out{first.value, first.dz, first.dzc, {}, {}, {}, {}};
    product_second(a, b, out);
    return out;
}

SecondOrderJet conj(const SecondOrderJet& a) {
    return {std::conj(a.value), std::conj(a.dzc),  std::conj(a.dz),   std::conj(a.dzczc),
            std::conj(a.dzcz),  std::conj(a.dzzc), std::conj(a.dzz)};
}

SecondOrderJet recip(const SecondOrderJet& a, real pole_floor) {
    const WirtingerJet first = recip(a.first_order(), pole_floor);
    SecondOrderJet out{first.value, first.dz, first.dzc, {}, {}, {}, {}};
    // G(p) = 1/p: G' = -1/p^2, G'' = 2/p^3
    const Complex inv = first.value;
    const PrimitiveSecondPartials g{inv, -inv * inv, {}, 2.0 * inv * inv * inv, {}, {}};
    chain_second(g, a, SecondOrderJet{}, out);
    return out;
}

SecondOrderJet div(const SecondOrderJet& a, const SecondOrderJet& b, real pole_floor) {
    const WirtingerJet first = div(a.first_order(), b.first_order(), pole_floor);
    SecondOrderJet out{first.value, first.dz, first.dzc, {}, {}, {}, {}};
    product_second(a, recip(b, pole_floor), out);
    return out;
}

SecondOrderJet apply_primitive(PrimitiveKind g, const SecondOrderJet& a, real pole_floor) {
    if (g.tag == Primitive::conj) {
        return conj(a);
    }
    const PrimitiveSecondPartials partials = primitive_second_partials(g, a.value, pole_floor);
    const WirtingerJet first = apply_primitive(g, a.first_order(), pole_floor);
    SecondOrderJet out{first.value, first.dz, first.dzc, {}, {}, {}, {}};
    if (g.holomorphic()) {
        chain_second(partials, a, SecondOrderJet{}, out);
    } else {
        chain_second(partials, a, conj(a), out);
    }
    return out;
}

HessianBlock hessian_block(const SecondOrderJet& jet) noexcept {
    return {jet.dz, jet.dzc, {{{jet.dzz, jet.dzzc}, {jet.dzcz, jet.dzczc}}}};
}

Complex second_order_taylor(const SecondOrderJet& jet, Complex h) noexcept {
    const Complex hc = std::conj(h);
    const Complex quadratic = h * (jet.dzz * h + jet.dzzc * hc) + hc * (jet.dzcz * h + jet.dzczc * hc);
    return jet.value + jet.dz * h + jet.dzc * hc + 0.5 * quadratic;
}

real mixed_partial_asymmetry(const SecondOrderJet& jet) noexcept {
    return std::abs(jet.dzzc - jet.dzcz) / (1.0 + std::abs(jet.dzzc));
}

} // namespace wirtinger
