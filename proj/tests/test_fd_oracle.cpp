#include <doctest.h>

#include "support.hpp"
#include "wirtinger/errors.hpp"
#include "wirtinger/eval.hpp"
#include "wirtinger/fd_oracle.hpp"

using namespace wirtinger;
using wirtinger::testing::close;
using wirtinger::testing::corpus;
using wirtinger::testing::kI;
using wirtinger::testing::Rng;

TEST_CASE("partials of simple functions") {
    const Complex c{0.4, -1.1};
    FdPartials p = fd_partials([](Complex w) { return w * w; }, c);
    CHECK(close(p.fx, 2.0 * c, 1e-9));
    CHECK(close(p.fy, 2.0 * kI * c, 1e-9));

    p = fd_partials([](Complex w) { return std::conj(w); }, c);
    CHECK(close(p.fx, 1.0, 1e-10));
    CHECK(close(p.fy, -kI, 1e-10));
}

TEST_CASE("Wirtinger estimates for the basic examples") {
    const Complex c{1.0, 2.0};
    FdWirtinger w = fd_wirtinger([](Complex x) { return x * std::conj(x); }, c);
    CHECK(close(w.w, std::conj(c), 1e-9));
    CHECK(close(w.cw, c, 1e-9));

    w = fd_wirtinger([](Complex x) { return std::exp(x); }, c);
    CHECK(close(w.w, std::exp(c), 1e-9));
    CHECK(std::abs(w.cw) < 1e-9);
}

TEST_CASE("step validation") {
    const ScalarFunction f = [](Complex x) { return x; };
    CHECK_THROWS_AS(fd_partials(f, 0.0, 1e-13), StepTooSmall);
    CHECK_THROWS_AS(fd_wirtinger(f, 0.0, 0.0), StepTooSmall);
    CHECK_NOTHROW(fd_partials(f, 0.0, 1e-12));
}

TEST_CASE("classification verdicts") {
    CHECK(classify(parse("z^3"), {1.0, 2.0}).verdict == Holomorphy::holomorphic);
    CHECK(classify(parse("conj(z)^2 + zc"), {1.0, 2.0}).verdict == Holomorphy::conjugate_holomorphic);
    CHECK(classify(parse("(1+2i)"), {1.0, 2.0}).verdict == Holomorphy::both);
    const HolomorphyClass n = classify(parse("z*conj(z)"), 2.0);
    CHECK(n.verdict == Holomorphy::neither);
    CHECK(close(n.derivatives.w, 2.0, 1e-8));
    CHECK(close(n.derivatives.cw, 2.0, 1e-8));
    CHECK(n.cr_residual == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(n.conj_cr_residual == doctest::Approx(2.0).epsilon(1e-8));

    CHECK(verdict_from_residuals(0.0, 0.0, 1e-4) == Holomorphy::both);
    CHECK(verdict_from_residuals(1e-5, 1.0, 1e-4) == Holomorphy::holomorphic);
    CHECK(verdict_from_residuals(1.0, 1e-5, 1e-4) == Holomorphy::conjugate_holomorphic);
    CHECK(verdict_from_residuals(1.0, 1.0, 1e-4) == Holomorphy::neither);
    CHECK(to_string(Holomorphy::conjugate_holomorphic) == "ConjugateHolomorphic");
}

TEST_CASE("classification refuses non-differentiable points") {
    CHECK_THROWS_AS(classify(parse("abs(z)"), 0.0), DomainError);
    CHECK_THROWS_AS(classify(parse("1/z"), 0.0), PoleError);
}

TEST_CASE("corpus classification agrees with the syntactic holomorphy flag") {
    Rng rng(41);
    for (const auto& entry : corpus()) {
        const Expr e = parse(entry.text);
        const Complex c = rng.safe_point(0.5, 0.1);
        const HolomorphyClass h = classify(e, c);
        INFO(entry.text, " at ", c);
        if (entry.holomorphic) {
            CHECK(h.verdict == Holomorphy::holomorphic);
        } else {
            CHECK(h.verdict != Holomorphy::holomorphic);
        }
    }
}

TEST_CASE("the oracle converges at second order in the step") {
    const ScalarFunction f = [](Complex x) { return std::sin(x) * std::conj(x); };
    const Complex c{0.3, 0.9};
    const WirtingerJet exact = eval_first(parse("sin(z)*conj(z)"), c);
    const double e1 = std::abs(fd_wirtinger(f, c, 1e-2).w - exact.dz);
    const double e2 = std::abs(fd_wirtinger(f, c, 1e-3).w - exact.dz);
    CHECK(e2 / e1 < 0.02);
}
