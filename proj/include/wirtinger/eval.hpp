#pragma once

#include <variant>

#include "wirtinger/errors.hpp"
#include "wirtinger/expr.hpp"
#include "wirtinger/jet.hpp"
#include "wirtinger/second_order.hpp"

namespace wirtinger {

/**
 * Evaluate `e` at `c` in an arbitrary carrier. `Algebra` supplies
 *
 *   using value_type = ...;
 *   value_type variable(Complex c) const;
 *   value_type constant(Complex k) const;
 *   value_type add/sub/mul/div(value_type, value_type) const;
 *   value_type neg(value_type) const;
 *   value_type apply(PrimitiveKind, value_type) const;
 *
 * The conjugate variable zc is apply(conj, variable(c)).
 */
template <class Algebra>
typename Algebra::value_type evaluate(const Expr& e, Complex c, const Algebra& alg) {
    using Kind = Expr::Kind;
    switch (e.kind()) {
    case Kind::variable:
        return alg.variable(c);
    case Kind::conj_variable:
        return alg.apply(PrimitiveKind::of(Primitive::conj), alg.variable(c));
    case Kind::constant:
        return alg.constant(e.constant_value());
    case Kind::imaginary_unit:
        return alg.constant(Complex{0.0, 1.0});
    case Kind::add:
        return alg.add(evaluate(e.child(0), c, alg), evaluate(e.child(1), c, alg));
    case Kind::sub:
        return alg.sub(evaluate(e.child(0), c, alg), evaluate(e.child(1), c, alg));
    case Kind::mul:
        return alg.mul(evaluate(e.child(0), c, alg), evaluate(e.child(1), c, alg));
    case Kind::div:
        return alg.div(evaluate(e.child(0), c, alg), evaluate(e.child(1), c, alg));
    case Kind::neg:
        return alg.neg(evaluate(e.child(0), c, alg));
    case Kind::pow:
        return alg.apply(PrimitiveKind::power(e.exponent()), evaluate(e.child(0), c, alg));
    case Kind::call:
        return alg.apply(PrimitiveKind::of(e.primitive()), evaluate(e.child(0), c, alg));
    }
    throw Error("evaluate: unknown node kind");
}

/// Plain complex arithmetic.
struct ValueAlgebra {
    using value_type = Complex;
    real pole_floor = kDefaultPoleFloor;

    Complex variable(Complex c) const {
        require_finite(c, "variable");
        return c;
    }
    Complex constant(Complex k) const { return k; }
    Complex add(Complex a, Complex b) const { return a + b; }
    Complex sub(Complex a, Complex b) const { return a - b; }
    Complex mul(Complex a, Complex b) const { return a * b; }
    Complex div(Complex a, Complex b) const {
        if (!(std::abs(b) >= pole_floor)) {
            throw PoleError("div: denominator magnitude below pole floor");
        }
        return a / b;
    }
    Complex neg(Complex a) const { return -a; }
    Complex apply(PrimitiveKind g, Complex a) const { return primitive_value(g, a, pole_floor); }
};

/// First-order Wirtinger jets.
struct FirstOrderAlgebra {
    using value_type = WirtingerJet;
    real pole_floor = kDefaultPoleFloor;

    WirtingerJet variable(Complex c) const { return seed_variable(c); }
    WirtingerJet constant(Complex k) const { return wirtinger::constant(k); }
    WirtingerJet add(const WirtingerJet& a, const WirtingerJet& b) const { return a + b; }
    WirtingerJet sub(const WirtingerJet& a, const WirtingerJet& b) const { return a - b; }
    WirtingerJet mul(const WirtingerJet& a, const WirtingerJet& b) const { return wirtinger::mul(a, b); }
    WirtingerJet div(const WirtingerJet& a, const WirtingerJet& b) const { return wirtinger::div(a, b, pole_floor); }
    WirtingerJet neg(const WirtingerJet& a) const { return -a; }
    WirtingerJet apply(PrimitiveKind g, const WirtingerJet& a) const {
        return apply_primitive(g, a, pole_floor);
    }
};

/// Second-order jets. abs is rejected with UnsupportedPrimitive.
struct SecondOrderAlgebra {
    using value_type = SecondOrderJet;
    real pole_floor = kDefaultPoleFloor;

    SecondOrderJet variable(Complex c) const { return seed_variable2(c); }
    SecondOrderJet constant(Complex k) const { return constant2(k); }
    SecondOrderJet add(const SecondOrderJet& a, const SecondOrderJet& b) const { return a + b; }
    SecondOrderJet sub(const SecondOrderJet& a, const SecondOrderJet& b) const { return a - b; }
    SecondOrderJet mul(const SecondOrderJet& a, const SecondOrderJet& b) const { return wirtinger::mul(a, b); }
    SecondOrderJet div(const SecondOrderJet& a, const SecondOrderJet& b) const {
        return wirtinger::div(a, b, pole_floor);
    }
    SecondOrderJet neg(const SecondOrderJet& a) const { return -a; }
    SecondOrderJet apply(PrimitiveKind g, const SecondOrderJet& a) const {
        return apply_primitive(g, a, pole_floor);
    }
};

// The eval_* entry points reject non-finite results with NonFiniteError.

Complex eval_value(const Expr& e, Complex c, real pole_floor = kDefaultPoleFloor);
WirtingerJet eval_first(const Expr& e, Complex c, real pole_floor = kDefaultPoleFloor);
SecondOrderJet propagate_second_order(const Expr& e, Complex c, real pole_floor = kDefaultPoleFloor);

using JetResult = std::variant<Complex, WirtingerJet, SecondOrderJet>;

/// order 0 -> Complex, 1 -> WirtingerJet, 2 -> SecondOrderJet. Other orders: std::invalid_argument.
JetResult eval_jet(const Expr& e, Complex c, int order, real pole_floor = kDefaultPoleFloor);

} // namespace wirtinger
