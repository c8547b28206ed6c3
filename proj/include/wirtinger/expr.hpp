#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>

#include "wirtinger/jet.hpp"

namespace wirtinger {

/**
 * Immutable expression tree over the single variable z.
 *
 * Node kinds:
 *   variable        z
 *   conj_variable   zc (the literal z*)
 *   constant        a complex number
 *   imaginary_unit  i
 *   add sub mul div (binary), neg (unary)
 *   pow             base ^ integer exponent, |exponent| <= 64
 *   call            primitive(argument), e.g. exp(z), conj(z), abs2(z)
 *
 * Copies share the underlying nodes.
 */
class Expr {
public:
    enum class Kind { variable, conj_variable, constant, imaginary_unit, add, sub, mul, div, neg, pow, call };

    static Expr variable();
    static Expr conj_variable();
    static Expr constant(Complex k);
    static Expr imaginary_unit();
    static Expr binary(Kind kind, Expr lhs, Expr rhs);
    static Expr neg(Expr operand);
    /// Throws std::invalid_argument when |exponent| exceeds kMaxPowExponent.
    static Expr pow(Expr base, int exponent);
    /// `p` must be callable (anything but pow_int).
    static Expr call(Primitive p, Expr argument);

    Kind kind() const noexcept;
    Complex constant_value() const noexcept;
    int exponent() const noexcept;
    Primitive primitive() const noexcept;

    /// Child 0 is the lhs / operand / base / argument; child 1 the rhs of a binary node.
    const Expr& child(std::size_t index) const;
    std::size_t arity() const noexcept;

    /// Structural equality; constants compare by value.
    friend bool operator==(const Expr& a, const Expr& b);

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);

/// Parse expression text. Grammar, loosest binding first:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' exponent)?
///   exponent:= ['-' | '+'] (INT | '(' exponent ')') ('^' exponent)?      right-associative
///   primary := NUMBER ['i'] | 'i' | 'z' | 'zc' | NAME '(' expr ')' | '(' expr ')'
///
/// A parenthesised complex literal such as (2-3i), (-1) or (-4i) is a single constant.
/// Throws SyntaxError (with byte offset), UnknownIdentifier or ArityError.
Expr parse(std::string_view text);

/// Canonical rendering with the minimum parentheses needed for parse(format(e)) == e.
std::string format(const Expr& e);

/// Parse a standalone complex literal: "2", "-3i", "1+2i", "-1.5e-3-2i".
/// Throws SyntaxError.
Complex parse_complex(std::string_view text);

/// Shortest round-tripping rendering of a complex number in the literal syntax.
std::string format_complex(Complex z);

} // namespace wirtinger
