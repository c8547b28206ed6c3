#include <doctest.h>

#include "support.hpp"
#include "wirtinger/errors.hpp"
#include "wirtinger/eval.hpp"
#include "wirtinger/fd_oracle.hpp"
#include "wirtinger/jet.hpp"

using namespace wirtinger;
using wirtinger::testing::close;
using wirtinger::testing::kI;
using wirtinger::testing::Rng;

namespace {

WirtingerJet at(const char* text, Complex c) {
    return eval_first(parse(text), c);
}

} // namespace

TEST_CASE("seed and constant jets") {
    const WirtingerJet s = seed_variable({1.5, -2.0});
    CHECK(s == WirtingerJet{{1.5, -2.0}, 1.0, 0.0});
    CHECK(constant({3.0, 4.0}) == WirtingerJet{{3.0, 4.0}, 0.0, 0.0});
    CHECK_THROWS_AS(seed_variable({NAN, 0.0}), NonFiniteError);
    CHECK_THROWS_AS(constant({0.0, INFINITY}), NonFiniteError);
}

TEST_CASE("closed-form derivatives of the worked examples") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Complex z = rng.safe_point();
        const Complex zc = std::conj(z);

        WirtingerJet j = at("z^2", z);
        CHECK(close(j.dz, 2.0 * z, 1e-14));
        CHECK(j.dzc == Complex{});

        j = at("conj(z)", z);
        CHECK(j.dz == Complex{});
        CHECK(j.dzc == Complex{1.0, 0.0});

        j = at("z^3 - i*z + conj(z)^2", z);
        CHECK(close(j.dz, 3.0 * z * z - kI, 1e-13));
        CHECK(close(j.dzc, 2.0 * zc, 1e-13));

        j = at("1/z", z);
        CHECK(close(j.dz, -1.0 / (z * z), 1e-13));
        CHECK(j.dzc == Complex{});

        j = at("(z^2 + conj(z))^3", z);
        const Complex u = z * z + zc;
        CHECK(close(j.dz, 6.0 * z * u * u, 1e-13));
        CHECK(close(j.dzc, 3.0 * u * u, 1e-13));

        j = at("z*conj(z)", z);
        CHECK(j.dz == zc);
        CHECK(j.dzc == z);
    }
}

TEST_CASE("sign of the linear term in z^3 - iz + conj(z)^2 agrees with finite differences") {
    const ScalarFunction f = as_function(parse("z^3 - i*z + conj(z)^2"));
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const Complex z = rng.point();
        const FdWirtinger fd = fd_wirtinger(f, z);
        CHECK(close(fd.w, 3.0 * z * z - kI, 1e-8));
        CHECK_FALSE(close(fd.w, 3.0 * z * z + kI, 1e-3));
    }
}

TEST_CASE("real and imaginary parts have constant derivative pairs") {
    const Complex c{0.7, -1.3};
    const WirtingerJet r = apply_primitive(PrimitiveKind::of(Primitive::re), seed_variable(c));
    CHECK(r == WirtingerJet{0.7, 0.5, 0.5});
    const WirtingerJet m = apply_primitive(PrimitiveKind::of(Primitive::im), seed_variable(c));
    CHECK(m.value == Complex{-1.3, 0.0});
    CHECK(m.dz == Complex{0.0, -0.5});
    CHECK(m.dzc == Complex{0.0, 0.5});

    // re(z) = (z + z*)/2 by the product and conjugation rules as well
    const WirtingerJet s = seed_variable(c);
    const WirtingerJet viaconj = linear_combine(0.5, s, 0.5, conj(s));
    CHECK(close(viaconj.value, r.value, 1e-15));
    CHECK(viaconj.dz == r.dz);
    CHECK(viaconj.dzc == r.dzc);
}

TEST_CASE("quotient of z^2 by z is z") {
    const WirtingerJet s = seed_variable({3.0, 1.0});
    const WirtingerJet q = div(mul(s, s), s);
    CHECK(close(q.value, {3.0, 1.0}, 1e-15));
    CHECK(close(q.dz, 1.0, 1e-15));
    CHECK(q.dzc == Complex{});
}

TEST_CASE("conjugation is an involution and swaps the derivative slots") {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const WirtingerJet j{rng.point(), rng.point(), rng.point()};
        const WirtingerJet c = conj(j);
        CHECK(c.value == std::conj(j.value));
        CHECK(c.dz == std::conj(j.dzc));
        CHECK(c.dzc == std::conj(j.dz));
        CHECK(conj(c) == j);
    }
}

TEST_CASE("linear_combine, sum and product rules agree with the jet arithmetic operators") {
    Rng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const WirtingerJet a{rng.point(), rng.point(), rng.point()};
        const WirtingerJet b{rng.point(), rng.point(), rng.point()};
        CHECK(linear_combine(1.0, a, 1.0, b) == a + b);
        const WirtingerJet p = a * b;
        CHECK(p.value == a.value * b.value);
        CHECK(close(p.dz, a.dz * b.value + a.value * b.dz, 1e-15));
        CHECK(close(p.dzc, a.dzc * b.value + a.value * b.dzc, 1e-15));
        // (a/b)*b recovers a
        const WirtingerJet back = (a / b) * b;
        CHECK(close(back.value, a.value, 1e-12));
        CHECK(close(back.dz, a.dz, 1e-12));
        CHECK(close(back.dzc, a.dzc, 1e-12));
    }
}

TEST_CASE("primitive partials match finite differences of the primitive values") {
    Rng rng(15);
    const Primitive all[] = {Primitive::exp, Primitive::log, Primitive::sin,  Primitive::cos,
                             Primitive::sqrt, Primitive::conj, Primitive::re, Primitive::im,
                             Primitive::abs, Primitive::abs2, Primitive::arg};
    for (const Primitive p : all) {
        const PrimitiveKind g = PrimitiveKind::of(p);
        for (int trial = 0; trial < 20; ++trial) {
            const Complex w = rng.safe_point();
            const PrimitivePartials d = primitive_partials(g, w);
            const FdWirtinger fd = fd_wirtinger([&](Complex x) { return primitive_value(g, x); }, w);
            INFO(primitive_name(p), " at ", w);
            CHECK(close(d.dz, fd.w, 1e-8));
            CHECK(close(d.dzc, fd.cw, 1e-8));
            if (g.holomorphic()) {
                CHECK(d.dzc == Complex{});
            }
        }
    }
    for (int k = -6; k <= 6; ++k) {
        const PrimitiveKind g = PrimitiveKind::power(k);
        const Complex w = rng.safe_point();
        const PrimitivePartials d = primitive_partials(g, w);
        const FdWirtinger fd = fd_wirtinger([&](Complex x) { return primitive_value(g, x); }, w);
        CHECK(close(d.dz, fd.w, 1e-7));
        CHECK(d.dzc == Complex{});
    }
}

TEST_CASE("int_power matches std::pow") {
    Rng rng(16);
    for (int k = -kMaxPowExponent; k <= kMaxPowExponent; ++k) {
        const Complex w = std::polar(rng.uniform(0.8, 1.2), rng.uniform(-3.0, 3.0));
        CHECK(close(int_power(w, k), std::pow(w, k), 1e-12 * (1 + std::abs(k))));
    }
    CHECK(int_power({0.0, 0.0}, 0) == Complex{1.0, 0.0});
    CHECK(int_power({0.0, 0.0}, 3) == Complex{});
    CHECK_THROWS_AS(int_power({0.0, 0.0}, -1), PoleError);
}

TEST_CASE("singular points raise the documented errors") {
    const Complex zero{};
    CHECK_THROWS_AS(recip(seed_variable(zero)), PoleError);
    CHECK_THROWS_AS(div(constant(1.0), seed_variable(zero)), PoleError);
    CHECK_THROWS_AS(at("1/z", zero), PoleError);
    CHECK_THROWS_AS(at("log(z)", zero), DomainError);
    CHECK_THROWS_AS(at("arg(z)", zero), DomainError);
    CHECK_THROWS_AS(at("sqrt(z)", zero), DomainError);
    CHECK_THROWS_AS(at("abs(z)", zero), DomainError);
    CHECK_THROWS_AS(at("exp(exp(exp(z)))", Complex{10.0, 0.0}), NonFiniteError);

    // values alone are defined where only the derivative fails
    CHECK(eval_value(parse("sqrt(z)"), zero) == Complex{});
    CHECK(eval_value(parse("abs(z)"), zero) == Complex{});
    CHECK_THROWS_AS(eval_value(parse("log(z)"), zero), DomainError);
    CHECK_THROWS_AS(eval_value(parse("1/z"), zero), PoleError);

    // a custom pole floor widens the excluded disc
    CHECK_THROWS_AS(recip(seed_variable({1e-5, 0.0}), 1e-4), PoleError);
    CHECK_NOTHROW(recip(seed_variable({1e-5, 0.0}), 1e-6));
}

TEST_CASE("abs and arg derivatives") {
    const Complex w{3.0, 4.0};
    const PrimitivePartials a = primitive_partials(PrimitiveKind::of(Primitive::abs), w);
    CHECK(a.value == Complex{5.0, 0.0});
    CHECK(close(a.dz, std::conj(w) / 10.0, 1e-16));
    CHECK(close(a.dzc, w / 10.0, 1e-16));
    const PrimitivePartials g = primitive_partials(PrimitiveKind::of(Primitive::arg), w);
    CHECK(close(g.value, std::arg(w), 1e-16));
    CHECK(close(g.dz, -kI / (2.0 * w), 1e-16));
    CHECK(close(g.dzc, kI / (2.0 * std::conj(w)), 1e-16));
}

TEST_CASE("primitive names round trip") {
    const Primitive callable[] = {Primitive::exp, Primitive::log, Primitive::sin,  Primitive::cos,
                                  Primitive::sqrt, Primitive::conj, Primitive::re, Primitive::im,
                                  Primitive::abs, Primitive::abs2, Primitive::arg};
    for (const Primitive p : callable) {
        CHECK(primitive_from_name(primitive_name(p)) == p);
    }
    CHECK_FALSE(primitive_from_name("tan").has_value());
    CHECK_FALSE(primitive_from_name("pow").has_value());
}
