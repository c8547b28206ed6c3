#pragma once

// Shared test fixtures: random points, the expression corpus, a random AST
// generator and finite-difference oracles that never touch the jet code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wirtinger/eval.hpp"
#include "wirtinger/expr.hpp"
#include "wirtinger/hilbert.hpp"
#include "wirtinger/jet.hpp"

namespace wirtinger::testing {

inline constexpr Complex kI{0.0, 1.0};

/// |a - b| <= tol * (1 + |b|)
inline bool close(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::abs(b));
}

inline double rel_err(Complex a, Complex b) {
    return std::abs(a - b) / (1.0 + std::abs(b));
}

inline bool close(const HVec& a, const HVec& b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!close(a[k], b[k], tol)) {
            return false;
        }
    }
    return true;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

    Complex point(double radius = 2.0) { return {uniform(-radius, radius), uniform(-radius, radius)}; }
    Complex gaussian() { return {normal() / std::sqrt(2.0), normal() / std::sqrt(2.0)}; }

    /// Point in the box, at least `min_abs` from 0 and `cut_margin` from the negative real axis.
    Complex safe_point(double min_abs = 0.3, double cut_margin = 0.05, double radius = 2.0) {
        for (;;) {
            const Complex z = point(radius);
            if (std::abs(z) < min_abs) {
                continue;
            }
            if (z.real() < 0.0 && std::abs(z.imag()) < cut_margin) {
                continue;
            }
            return z;
        }
    }

    Complex unit_direction() { return std::polar(1.0, uniform(0.0, 2.0 * M_PI)); }

    HVec vector(std::size_t n) {
        std::vector<Complex> v(n);
        for (auto& x : v) {
            x = gaussian();
        }
        return HVec(std::move(v));
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

struct CorpusEntry {
    std::string text;
    bool holomorphic;          // no conjugation-bearing primitive
    bool second_order;         // admits a second-order rule (no abs)
};

/// Twenty expressions covering every primitive, smooth away from 0 and the negative real axis.
inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries{
        {"z^2", true, true},
        {"conj(z)", false, true},
        {"z^3 - i*z + conj(z)^2", false, true},
        {"1/z", true, true},
        {"(z^2+conj(z))^3", false, true},
        {"z*conj(z)", false, true},
        {"exp(z)*conj(z)", false, true},
        {"sin(z) + cos(conj(z))", false, true},
        {"log(z)", true, true},
        {"sqrt(z)", true, true},
        {"re(z)^2 + im(z)^3", false, true},
        {"abs(z)", false, false},
        {"abs2(z - 1 - i)", false, true},
        {"arg(z)", false, true},
        {"z^-2 * zc", false, true},
        {"(z + 2i)/(conj(z) - 3)", false, true},
        {"exp(i*abs2(z))", false, true},
        {"abs(z)^3 + z*zc", false, false},
        {"sin(z*conj(z)) / (1 + abs2(z))", false, true},
        {"cos(z)^2 - 2*re(z*z)*im(conj(z))", false, true},
    };
    return entries;
}

/// Second Wirtinger partials from central second differences of f in x and y:
///   d2/dz2 = (fxx - 2i fxy - fyy)/4,  d2/dzdz* = (fxx + fyy)/4,  d2/dz*2 = (fxx + 2i fxy - fyy)/4.
struct FdSecond {
    Complex dzz, dzzc, dzczc;
};

inline FdSecond fd_second_wirtinger(const std::function<Complex(Complex)>& f, Complex c, double h = 1e-4) {
    const Complex hx{h, 0.0};
    const Complex hy{0.0, h};
    const Complex f0 = f(c);
    const Complex fxx = (f(c + hx) - 2.0 * f0 + f(c - hx)) / (h * h);
    const Complex fyy = (f(c + hy) - 2.0 * f0 + f(c - hy)) / (h * h);
    const Complex fxy = (f(c + hx + hy) - f(c + hx - hy) - f(c - hx + hy) + f(c - hx - hy)) / (4.0 * h * h);
    return {(fxx - 2.0 * kI * fxy - fyy) / 4.0, (fxx + fyy) / 4.0, (fxx + 2.0 * kI * fxy - fyy) / 4.0};
}

/// Random AST of depth at most `depth`. In holomorphic mode only z, constants,
/// arithmetic and exp/log/sin/cos/sqrt appear.
class ExprGenerator {
public:
    explicit ExprGenerator(Rng& rng, bool holomorphic = false) : rng_(rng), holomorphic_(holomorphic) {}

    Expr generate(int depth) {
        if (depth <= 0 || rng_.integer(0, 9) < 3) {
            return leaf();
        }
        switch (rng_.integer(0, 7)) {
        case 0:
            return Expr::binary(Expr::Kind::add, generate(depth - 1), generate(depth - 1));
        case 1:
            return Expr::binary(Expr::Kind::sub, generate(depth - 1), generate(depth - 1));
        case 2:
            return Expr::binary(Expr::Kind::mul, generate(depth - 1), generate(depth - 1));
        case 3:
            return Expr::binary(Expr::Kind::div, generate(depth - 1), generate(depth - 1));
        case 4:
            return Expr::neg(generate(depth - 1));
        case 5:
            return Expr::pow(generate(depth - 1), rng_.integer(-kMaxPowExponent, kMaxPowExponent));
        default: {
            if (holomorphic_) {
                static constexpr Primitive kHolomorphic[] = {Primitive::exp, Primitive::log, Primitive::sin,
                                                             Primitive::cos, Primitive::sqrt};
                return Expr::call(kHolomorphic[rng_.integer(0, 4)], generate(depth - 1));
            }
            static constexpr Primitive kCallable[] = {Primitive::exp,  Primitive::log, Primitive::sin,
                                                      Primitive::cos,  Primitive::sqrt, Primitive::conj,
                                                      Primitive::re,   Primitive::im,  Primitive::abs,
                                                      Primitive::abs2, Primitive::arg};
            return Expr::call(kCallable[rng_.integer(0, 10)], generate(depth - 1));
        }
        }
    }

private:
    Expr leaf() {
        if (holomorphic_) {
            return rng_.integer(0, 2) == 0 ? Expr::constant(constant()) : Expr::variable();
        }
        switch (rng_.integer(0, 5)) {
        case 0:
            return Expr::variable();
        case 1:
            return Expr::conj_variable();
        case 2:
            return Expr::imaginary_unit();
        default:
            return Expr::constant(constant());
        }
    }

    Complex constant() {
        const auto component = [&]() -> double {
            switch (rng_.integer(0, 4)) {
            case 0:
                return 0.0;
            case 1:
                return static_cast<double>(rng_.integer(-9, 9));
            case 2:
                return rng_.uniform(-10.0, 10.0);
            case 3:
                return std::ldexp(rng_.uniform(-1.0, 1.0), rng_.integer(-300, 300));
            default:
                return rng_.uniform(0.0, 1e-3);
            }
        };
        return {component(), component()};
    }

    Rng& rng_;
    bool holomorphic_;
};

} // namespace wirtinger::testing
