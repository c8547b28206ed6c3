#include "wirtinger/expr.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>
#include <utility>
#include <vector>

#include "wirtinger/errors.hpp"

namespace wirtinger {

struct Expr::Node {
    Kind kind = Kind::variable;
    Complex value{};
    int exponent = 0;
    Primitive primitive = Primitive::exp;
    std::vector<Expr> children;
};

namespace {

using Kind = Expr::Kind;

// Deeper nesting than this is rejected so hostile input cannot exhaust the stack.
constexpr int kMaxNesting = 256;

// Exponent folding saturates here; anything this large is out of range anyway.
constexpr long long kExponentSaturation = 1LL << 20;

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

enum class Tok { number, ident, op, end };

struct Token {
    Tok type = Tok::end;
    std::size_t offset = 0;
    std::size_t length = 0;
    real number = 0.0;
    bool imaginary = false;
    char op = '\0';
    std::string_view text;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++pos;
            continue;
        }
        Token tok;
        tok.offset = pos;
        if (is_digit(c) || (c == '.' && pos + 1 < text.size() && is_digit(text[pos + 1]))) {
            std::size_t end = pos;
            while (end < text.size() && is_digit(text[end])) {
                ++end;
            }
            if (end < text.size() && text[end] == '.') {
                ++end;
                while (end < text.size() && is_digit(text[end])) {
                    ++end;
                }
            }
            if (end < text.size() && (text[end] == 'e' || text[end] == 'E')) {
                std::size_t exp_end = end + 1;
                if (exp_end < text.size() && (text[exp_end] == '+' || text[exp_end] == '-')) {
                    ++exp_end;
                }
                if (exp_end < text.size() && is_digit(text[exp_end])) {
                    while (exp_end < text.size() && is_digit(text[exp_end])) {
                        ++exp_end;
                    }
                    end = exp_end;
                }
            }
            const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, tok.number);
            if (ec != std::errc{} || ptr != text.data() + end || !std::isfinite(tok.number)) {
                throw SyntaxError("numeric literal out of range", pos);
            }
            if (end < text.size() && text[end] == 'i' && (end + 1 >= text.size() || !is_ident_char(text[end + 1]))) {
                tok.imaginary = true;
                ++end;
            }
            tok.type = Tok::number;
            tok.length = end - pos;
            pos = end;
        } else if (is_ident_start(c)) {
            std::size_t end = pos;
            while (end < text.size() && is_ident_char(text[end])) {
                ++end;
            }
            tok.type = Tok::ident;
            tok.text = text.substr(pos, end - pos);
            tok.length = end - pos;
            pos = end;
        } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '(' || c == ')' || c == ',') {
            tok.type = Tok::op;
            tok.op = c;
            tok.length = 1;
            ++pos;
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
        }
        tokens.push_back(tok);
    }
    Token end;
    end.offset = text.size();
    tokens.push_back(end);
    return tokens;
}

bool is_op(const Token& t, char op) {
    return t.type == Tok::op && t.op == op;
}

// Recognises a parenthesised complex literal starting at tokens[at] == '('.
// Accepted shapes: (a) (bi) (-a) (-bi) (a+bi) (a-bi) (-a+bi) (-a-bi).
// Returns the number of tokens consumed and stores the value, or 0.
std::size_t match_paren_literal(const std::vector<Token>& tokens, std::size_t at, Complex& out) {
    std::size_t k = at;
    if (!is_op(tokens[k], '(')) {
        return 0;
    }
    ++k;
    real sign = 1.0;
    if (is_op(tokens[k], '-')) {
        sign = -1.0;
        ++k;
    }
    if (tokens[k].type != Tok::number) {
        return 0;
    }
    const Token& first = tokens[k++];
    if (first.imaginary || !(tokens[k].type == Tok::op && (tokens[k].op == '+' || tokens[k].op == '-'))) {
        if (!is_op(tokens[k], ')')) {
            return 0;
        }
        out = first.imaginary ? Complex{0.0, sign * first.number} : Complex{sign * first.number, 0.0};
        return k + 1 - at;
    }
    const real im_sign = tokens[k].op == '-' ? -1.0 : 1.0;
    ++k;
    if (tokens[k].type != Tok::number || !tokens[k].imaginary) {
        return 0;
    }
    const Token& second = tokens[k++];
    if (!is_op(tokens[k], ')')) {
        return 0;
    }
    out = Complex{sign * first.number, im_sign * second.number};
    return k + 1 - at;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    Expr parse_all() {
        if (peek().type == Tok::end) {
            throw SyntaxError("empty expression", 0);
        }
        Expr e = parse_expr();
        if (peek().type != Tok::end) {
            throw SyntaxError("unexpected trailing input", peek().offset);
        }
        return e;
    }

private:
    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > kMaxNesting) {
                throw SyntaxError("expression nested too deeply", parser.peek().offset);
            }
        }
        ~DepthGuard() { --parser.depth_; }
        DepthGuard(const DepthGuard&) = delete;
        DepthGuard& operator=(const DepthGuard&) = delete;
        Parser& parser;
    };

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    void expect(char op) {
        if (!is_op(peek(), op)) {
            throw SyntaxError(std::string("expected '") + op + "'", peek().offset);
        }
        ++pos_;
    }

    Expr parse_expr() {
        DepthGuard guard(*this);
        Expr lhs = parse_term();
        while (is_op(peek(), '+') || is_op(peek(), '-')) {
            const char op = next().op;
            Expr rhs = parse_term();
            lhs = Expr::binary(op == '+' ? Kind::add : Kind::sub, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr parse_term() {
        Expr lhs = parse_unary();
        while (is_op(peek(), '*') || is_op(peek(), '/')) {
            const char op = next().op;
            Expr rhs = parse_unary();
            lhs = Expr::binary(op == '*' ? Kind::mul : Kind::div, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr parse_unary() {
        DepthGuard guard(*this);
        if (is_op(peek(), '-')) {
            ++pos_;
            return Expr::neg(parse_unary());
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (is_op(peek(), '^')) {
            ++pos_;
            const std::size_t at = peek().offset;
            const long long k = parse_exponent();
            if (k > kMaxPowExponent || k < -kMaxPowExponent) {
                throw SyntaxError("exponent out of range", at);
            }
            return Expr::pow(std::move(base), static_cast<int>(k));
        }
        return base;
    }

    long long parse_exponent() {
        DepthGuard guard(*this);
        long long sign = 1;
        if (is_op(peek(), '-') || is_op(peek(), '+')) {
            sign = next().op == '-' ? -1 : 1;
        }
        long long value = 0;
        if (is_op(peek(), '(')) {
            ++pos_;
            value = parse_exponent();
            expect(')');
        } else {
            const Token& t = peek();
            if (t.type != Tok::number || t.imaginary || t.number != std::floor(t.number)) {
                throw SyntaxError("exponent must be an integer", t.offset);
            }
            value = t.number > static_cast<real>(kExponentSaturation) ? kExponentSaturation
                                                                       : static_cast<long long>(t.number);
            ++pos_;
        }
        if (is_op(peek(), '^')) {
            ++pos_;
            const std::size_t at = peek().offset;
            const long long power = parse_exponent();
            value = saturating_power(value, power, at);
        }
        return sign * value;
    }

    static long long saturating_power(long long base, long long power, std::size_t at) {
        if (power < 0) {
            if (base == 1 || base == -1) {
                return (power % 2 == 0) ? 1 : base;
            }
            throw SyntaxError("exponent must be an integer", at);
        }
        long long result = 1;
        for (long long i = 0; i < power; ++i) {
            result *= base;
            if (result > kExponentSaturation || result < -kExponentSaturation) {
                return result > 0 ? kExponentSaturation : -kExponentSaturation;
            }
            if (result == 0 || result == 1) {
                break;
            }
            if (result == -1) {
                return ((power - i - 1) % 2 == 0) ? -1 : 1;
            }
        }
        return result;
    }

    Expr parse_primary() {
        const Token& t = peek();
        switch (t.type) {
        case Tok::number:
            ++pos_;
            return Expr::constant(t.imaginary ? Complex{0.0, t.number} : Complex{t.number, 0.0});
        case Tok::ident:
            return parse_identifier();
        case Tok::op:
            if (t.op == '(') {
                Complex literal;
                if (const std::size_t used = match_paren_literal(tokens_, pos_, literal)) {
                    pos_ += used;
                    return Expr::constant(literal);
                }
                ++pos_;
                Expr inner = parse_expr();
                expect(')');
                return inner;
            }
            throw SyntaxError(std::string("unexpected '") + t.op + "'", t.offset);
        case Tok::end:
            throw SyntaxError("unexpected end of input", t.offset);
        }
        throw SyntaxError("unexpected token", t.offset);
    }

    Expr parse_identifier() {
        const Token& t = next();
        if (t.text == "z") {
            return Expr::variable();
        }
        if (t.text == "zc") {
            return Expr::conj_variable();
        }
        if (t.text == "i") {
            return Expr::imaginary_unit();
        }
        const auto primitive = primitive_from_name(t.text);
        if (!primitive) {
            throw UnknownIdentifier("unknown identifier '" + std::string(t.text) + "'", t.offset);
        }
        if (!is_op(peek(), '(')) {
            throw SyntaxError("expected '(' after '" + std::string(t.text) + "'", peek().offset);
        }
        ++pos_;
        std::vector<Expr> args;
        if (!is_op(peek(), ')')) {
            args.push_back(parse_expr());
            while (is_op(peek(), ',')) {
                ++pos_;
                args.push_back(parse_expr());
            }
        }
        expect(')');
        if (args.size() != 1) {
            throw ArityError("'" + std::string(t.text) + "' takes exactly one argument, got " +
                                 std::to_string(args.size()),
                             t.offset);
        }
        return Expr::call(*primitive, std::move(args.front()));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

std::string format_real(real x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

int precedence(Kind k) {
    switch (k) {
    case Kind::add:
    case Kind::sub:
        return 1;
    case Kind::mul:
    case Kind::div:
        return 2;
    case Kind::neg:
        return 3;
    case Kind::pow:
        return 4;
    default:
        return 5;
    }
}

// Parenthesise `text`. When the result would read back as a single complex
// literal, the trailing number is wrapped once more so the structure survives.
std::string wrap(const std::string& text) {
    std::string out = "(" + text + ")";
    const std::vector<Token> tokens = tokenize(out);
    Complex ignored;
    if (match_paren_literal(tokens, 0, ignored) == tokens.size() - 1) {
        const Token& last_number = tokens[tokens.size() - 3];
        out.insert(out.size() - 1, ")");
        out.insert(last_number.offset, "(");
    }
    return out;
}

std::string format_constant(Complex k) {
    const bool re_nonneg = !std::signbit(k.real());
    const bool im_nonneg = !std::signbit(k.imag());
    if (k.imag() == 0.0 && im_nonneg && re_nonneg) {
        return format_real(k.real());
    }
    if (k.real() == 0.0 && re_nonneg && im_nonneg) {
        return format_real(k.imag()) + "i";
    }
    return "(" + format_complex(k) + ")";
}

std::string format_node(const Expr& e) {
    const auto sub = [](const Expr& child, bool needs_parens) {
        std::string s = format_node(child);
        return needs_parens ? wrap(s) : s;
    };
    switch (e.kind()) {
    case Kind::variable:
        return "z";
    case Kind::conj_variable:
        return "zc";
    case Kind::imaginary_unit:
        return "i";
    case Kind::constant:
        return format_constant(e.constant_value());
    case Kind::add:
    case Kind::sub: {
        const char op = e.kind() == Kind::add ? '+' : '-';
        return sub(e.child(0), false) + op + sub(e.child(1), precedence(e.child(1).kind()) <= 1);
    }
    case Kind::mul:
    case Kind::div: {
        const char op = e.kind() == Kind::mul ? '*' : '/';
        return sub(e.child(0), precedence(e.child(0).kind()) < 2) + op +
               sub(e.child(1), precedence(e.child(1).kind()) <= 2);
    }
    case Kind::neg:
        return "-" + sub(e.child(0), precedence(e.child(0).kind()) < 3);
    case Kind::pow:
        return sub(e.child(0), precedence(e.child(0).kind()) < 5) + "^" + std::to_string(e.exponent());
    case Kind::call:
        return std::string(primitive_name(e.primitive())) + "(" + format_node(e.child(0)) + ")";
    }
    return {};
}

} // namespace

Expr Expr::variable() {
    return Expr(std::make_shared<const Node>(Node{Kind::variable, {}, 0, Primitive::exp, {}}));
}

Expr Expr::conj_variable() {
    return Expr(std::make_shared<const Node>(Node{Kind::conj_variable, {}, 0, Primitive::exp, {}}));
}

Expr Expr::constant(Complex k) {
    if (!is_finite(k)) {
        throw NonFiniteError("Expr::constant: non-finite constant");
    }
    return Expr(std::make_shared<const Node>(Node{Kind::constant, k, 0, Primitive::exp, {}}));
}

Expr Expr::imaginary_unit() {
    return Expr(std::make_shared<const Node>(Node{Kind::imaginary_unit, {}, 0, Primitive::exp, {}}));
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs) {
    if (kind != Kind::add && kind != Kind::sub && kind != Kind::mul && kind != Kind::div) {
        throw std::invalid_argument("Expr::binary: not a binary operator");
    }
    return Expr(std::make_shared<const Node>(Node{kind, {}, 0, Primitive::exp, {std::move(lhs), std::move(rhs)}}));
}

Expr Expr::neg(Expr operand) {
    return Expr(std::make_shared<const Node>(Node{Kind::neg, {}, 0, Primitive::exp, {std::move(operand)}}));
}

Expr Expr::pow(Expr base, int exponent) {
    if (exponent > kMaxPowExponent || exponent < -kMaxPowExponent) {
        throw std::invalid_argument("Expr::pow: exponent out of range");
    }
    return Expr(std::make_shared<const Node>(Node{Kind::pow, {}, exponent, Primitive::pow_int, {std::move(base)}}));
}

Expr Expr::call(Primitive p, Expr argument) {
    if (p == Primitive::pow_int) {
        throw std::invalid_argument("Expr::call: use Expr::pow for integer powers");
    }
    return Expr(std::make_shared<const Node>(Node{Kind::call, {}, 0, p, {std::move(argument)}}));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }
Complex Expr::constant_value() const noexcept { return node_->value; }
int Expr::exponent() const noexcept { return node_->exponent; }
Primitive Expr::primitive() const noexcept { return node_->primitive; }
const Expr& Expr::child(std::size_t index) const { return node_->children.at(index); }
std::size_t Expr::arity() const noexcept { return node_->children.size(); }

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.kind() != b.kind()) {
        return false;
    }
    switch (a.kind()) {
    case Kind::constant:
        return a.constant_value() == b.constant_value();
    case Kind::pow:
        return a.exponent() == b.exponent() && a.child(0) == b.child(0);
    case Kind::call:
        return a.primitive() == b.primitive() && a.child(0) == b.child(0);
    default:
        break;
    }
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (!(a.child(i) == b.child(i))) {
            return false;
        }
    }
    return true;
}

Expr operator+(Expr a, Expr b) { return Expr::binary(Expr::Kind::add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(Expr::Kind::sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(Expr::Kind::mul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::binary(Expr::Kind::div, std::move(a), std::move(b)); }
Expr operator-(Expr a) { return Expr::neg(std::move(a)); }

Expr parse(std::string_view text) {
    return Parser(text).parse_all();
}

std::string format(const Expr& e) {
    return format_node(e);
}

Complex parse_complex(std::string_view text) {
    const std::vector<Token> tokens = tokenize(text);
    std::size_t k = 0;
    const auto sign_at = [&](std::size_t idx) -> real {
        if (is_op(tokens[idx], '-')) {
            return -1.0;
        }
        return 1.0;
    };
    const auto is_sign = [&](std::size_t idx) { return is_op(tokens[idx], '-') || is_op(tokens[idx], '+'); };
    const auto is_unit = [&](std::size_t idx) { return tokens[idx].type == Tok::ident && tokens[idx].text == "i"; };

    // One signed term: [sign] (NUMBER | NUMBERi | i). Returns the term and whether it is imaginary.
    const auto term = [&](bool sign_required) -> std::pair<real, bool> {
        real sign = 1.0;
        if (is_sign(k)) {
            sign = sign_at(k);
            ++k;
        } else if (sign_required) {
            throw SyntaxError("expected '+' or '-'", tokens[k].offset);
        }
        if (is_unit(k)) {
            ++k;
            return {sign, true};
        }
        if (tokens[k].type != Tok::number) {
            throw SyntaxError("expected a number", tokens[k].offset);
        }
        const Token& t = tokens[k++];
        return {sign * t.number, t.imaginary};
    };

    if (tokens[0].type == Tok::end) {
        throw SyntaxError("empty complex literal", 0);
    }
    const auto [first, first_imag] = term(false);
    Complex out = first_imag ? Complex{0.0, first} : Complex{first, 0.0};
    if (tokens[k].type != Tok::end) {
        if (first_imag) {
            throw SyntaxError("unexpected input after imaginary part", tokens[k].offset);
        }
        const std::size_t at = tokens[k].offset;
        const auto [second, second_imag] = term(true);
        if (!second_imag) {
            throw SyntaxError("expected an imaginary part", at);
        }
        out = Complex{first, second};
    }
    if (tokens[k].type != Tok::end) {
        throw SyntaxError("unexpected trailing input", tokens[k].offset);
    }
    return out;
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0 && !std::signbit(z.imag())) {
        return format_real(z.real());
    }
    if (z.real() == 0.0 && !std::signbit(z.real())) {
        return format_real(z.imag()) + "i";
    }
    const char sign = std::signbit(z.imag()) ? '-' : '+';
    return format_real(z.real()) + sign + format_real(std::abs(z.imag())) + "i";
}

} // namespace wirtinger
