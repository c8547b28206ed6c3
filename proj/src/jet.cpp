#include "wirtinger/jet.hpp"

#include <array>
#include <string>
#include <utility>

#include "wirtinger/errors.hpp"

namespace wirtinger {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_nonpole(Complex w, real pole_floor, std::string_view what) {
    if (!(std::abs(w) >= pole_floor)) {
        throw PoleError(std::string(what) + ": denominator magnitude below pole floor");
    }
}

void require_nonzero(Complex w, std::string_view what) {
    if (w == Complex{}) {
        throw DomainError(std::string(what) + ": not differentiable at 0");
    }
}

constexpr std::array<std::pair<std::string_view, Primitive>, 11> kNames{{
    {"exp", Primitive::exp},
    {"log", Primitive::log},
    {"sin", Primitive::sin},
    {"cos", Primitive::cos},
    {"sqrt", Primitive::sqrt},
    {"conj", Primitive::conj},
    {"re", Primitive::re},
    {"im", Primitive::im},
    {"abs", Primitive::abs},
    {"abs2", Primitive::abs2},
    {"arg", Primitive::arg},
}};

} // namespace

void require_finite(Complex z, std::string_view what) {
    if (!is_finite(z)) {
        throw NonFiniteError(std::string(what) + ": non-finite value");
    }
}

WirtingerJet seed_variable(Complex c) {
    require_finite(c, "seed_variable");
    return {c, Complex{1.0, 0.0}, Complex{}};
}

WirtingerJet constant(Complex k) {
    require_finite(k, "constant");
    return {k, Complex{}, Complex{}};
}

WirtingerJet linear_combine(Complex alpha, const WirtingerJet& a, Complex beta, const WirtingerJet& b) {
    return {alpha * a.value + beta * b.value, alpha * a.dz + beta * b.dz, alpha * a.dzc + beta * b.dzc};
}

WirtingerJet mul(const WirtingerJet& a, const WirtingerJet& b) {
    return {a.value * b.value, a.dz * b.value + a.value * b.dz, a.dzc * b.value + a.value * b.dzc};
}

WirtingerJet conj(const WirtingerJet& a) {
    return {std::conj(a.value), std::conj(a.dzc), std::conj(a.dz)};
}

WirtingerJet recip(const WirtingerJet& a, real pole_floor) {
    require_nonpole(a.value, pole_floor, "recip");
    const Complex sq = a.value * a.value;
    return {Complex{1.0, 0.0} / a.value, -a.dz / sq, -a.dzc / sq};
}

WirtingerJet div(const WirtingerJet& a, const WirtingerJet& b, real pole_floor) {
    require_nonpole(b.value, pole_floor, "div");
    const Complex sq = b.value * b.value;
    return {a.value / b.value, (a.dz * b.value - a.value * b.dz) / sq, (a.dzc * b.value - a.value * b.dzc) / sq};
}

std::string_view primitive_name(Primitive p) noexcept {
    if (p == Primitive::pow_int) {
        return "pow_int";
    }
    for (const auto& [name, tag] : kNames) {
        if (tag == p) {
            return name;
        }
    }
    return "?";
}

std::optional<Primitive> primitive_from_name(std::string_view name) noexcept {
    for (const auto& [n, tag] : kNames) {
        if (n == name) {
            return tag;
        }
    }
    return std::nullopt;
}

Complex int_power(Complex w, int k, real pole_floor) {
    if (k < 0) {
        require_nonpole(w, pole_floor, "pow_int");
    }
    unsigned n = k < 0 ? static_cast<unsigned>(-(static_cast<long>(k))) : static_cast<unsigned>(k);
    Complex result{1.0, 0.0};
    Complex base = w;
    while (n != 0) {
        if (n & 1U) {
            result *= base;
        }
        n >>= 1U;
        if (n != 0) {
            base *= base;
        }
    }
    return k < 0 ? Complex{1.0, 0.0} / result : result;
}

Complex primitive_value(PrimitiveKind g, Complex w, real pole_floor) {
    switch (g.tag) {
    case Primitive::exp:
        return std::exp(w);
    case Primitive::log:
        if (w == Complex{}) {
            throw DomainError("log: logarithm of zero");
        }
        return std::log(w);
    case Primitive::sin:
        return std::sin(w);
    case Primitive::cos:
        return std::cos(w);
    case Primitive::pow_int:
        return int_power(w, g.exponent, pole_floor);
    case Primitive::sqrt:
        return std::sqrt(w);
    case Primitive::conj:
        return std::conj(w);
    case Primitive::re:
        return {w.real(), 0.0};
    case Primitive::im:
        return {w.imag(), 0.0};
    case Primitive::abs:
        return {std::abs(w), 0.0};
    case Primitive::abs2:
        return w * std::conj(w);
    case Primitive::arg:
        if (w == Complex{}) {
            throw DomainError("arg: argument of zero is undefined");
        }
        return {std::arg(w), 0.0};
    }
    return {};
}

PrimitivePartials primitive_partials(PrimitiveKind g, Complex w, real pole_floor) {
    const Complex value = primitive_value(g, w, pole_floor);
    switch (g.tag) {
    case Primitive::exp:
        return {value, value, {}};
    case Primitive::log:
        return {value, Complex{1.0, 0.0} / w, {}};
    case Primitive::sin:
        return {value, std::cos(w), {}};
    case Primitive::cos:
        return {value, -std::sin(w), {}};
    case Primitive::pow_int: {
        const int k = g.exponent;
        if (k == 0) {
            return {value, {}, {}};
        }
        return {value, static_cast<real>(k) * int_power(w, k - 1, pole_floor), {}};
    }
    case Primitive::sqrt:
        require_nonzero(w, "sqrt");
        return {value, Complex{0.5, 0.0} / value, {}};
    case Primitive::conj:
        return {value, {}, Complex{1.0, 0.0}};
    case Primitive::re:
        return {value, Complex{0.5, 0.0}, Complex{0.5, 0.0}};
    case Primitive::im:
        return {value, Complex{0.0, -0.5}, Complex{0.0, 0.5}};
    case Primitive::abs: {
        require_nonzero(w, "abs");
        const real twice = 2.0 * value.real();
        return {value, std::conj(w) / twice, w / twice};
    }
    case Primitive::abs2:
        return {value, std::conj(w), w};
    case Primitive::arg:
        return {value, -kI / (2.0 * w), kI / (2.0 * std::conj(w))};
    }
    return {};
}

PrimitiveSecondPartials primitive_second_partials(PrimitiveKind g, Complex w, real pole_floor) {
    if (g.tag == Primitive::abs) {
        throw UnsupportedPrimitive("abs: no second-order rule");
    }
    const PrimitivePartials first = primitive_partials(g, w, pole_floor);
    PrimitiveSecondPartials out{first.value, first.dz, first.dzc, {}, {}, {}};
    switch (g.tag) {
    case Primitive::exp:
        out.dzz = first.value;
        break;
    case Primitive::log:
        out.dzz = -Complex{1.0, 0.0} / (w * w);
        break;
    case Primitive::sin:
        out.dzz = -first.value;
        break;
    case Primitive::cos:
        out.dzz = -first.value;
        break;
    case Primitive::pow_int: {
        const long k = g.exponent;
        if (k * (k - 1) != 0) {
            out.dzz = static_cast<real>(k * (k - 1)) * int_power(w, static_cast<int>(k - 2), pole_floor);
        }
        break;
    }
    case Primitive::sqrt:
        // d/dw (1/(2 sqrt w)) = -1/(4 w sqrt w)
        out.dzz = -Complex{0.25, 0.0} / (w * first.value);
        break;
    case Primitive::conj:
    case Primitive::re:
    case Primitive::im:
        break;
    case Primitive::abs2:
        out.dzzc = Complex{1.0, 0.0};
        break;
    case Primitive::arg: {
        const Complex wc = std::conj(w);
        out.dzz = kI / (2.0 * w * w);
        out.dzczc = -kI / (2.0 * wc * wc);
        break;
    }
    case Primitive::abs:
        break;
    }
    return out;
}

WirtingerJet apply_primitive(PrimitiveKind g, const WirtingerJet& a, real pole_floor) {
    if (g.tag == Primitive::conj) {
        return conj(a);
    }
    const PrimitivePartials p = primitive_partials(g, a.value, pole_floor);
    if (g.holomorphic()) {
        return {p.value, p.dz * a.dz, p.dz * a.dzc};
    }
    // d(a*)/dz = (da/dz*)*  and  d(a*)/dz* = (da/dz)*
    return {p.value, p.dz * a.dz + p.dzc * std::conj(a.dzc), p.dz * a.dzc + p.dzc * std::conj(a.dz)};
}

} // namespace wirtinger
