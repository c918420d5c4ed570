#include "prelie/scalar.hpp"

#include <cctype>

#include "prelie/errors.hpp"

namespace prelie {

namespace {

void check_same(const Scalar& x, const Scalar& y) {
    if (x.index() != y.index()) throw MixedVariant();
}

template <class Op>
Scalar binop(const Scalar& x, const Scalar& y, Op op) {
    check_same(x, y);
    if (std::holds_alternative<GaussRational>(x))
        return op(std::get<GaussRational>(x), std::get<GaussRational>(y));
    return op(std::get<RationalFunction>(x), std::get<RationalFunction>(y));
}

}  // namespace

Scalar add(const Scalar& x, const Scalar& y) {
    return binop(x, y, [](const auto& a, const auto& b) -> Scalar { return a + b; });
}

Scalar sub(const Scalar& x, const Scalar& y) {
    return binop(x, y, [](const auto& a, const auto& b) -> Scalar { return a - b; });
}

Scalar mul(const Scalar& x, const Scalar& y) {
    return binop(x, y, [](const auto& a, const auto& b) -> Scalar { return a * b; });
}

Scalar div(const Scalar& x, const Scalar& y) {
    return binop(x, y, [](const auto& a, const auto& b) -> Scalar { return a / b; });
}

Scalar neg(const Scalar& x) {
    return std::visit([](const auto& a) -> Scalar { return -a; }, x);
}

Scalar invert(const Scalar& x) {
    return std::visit([](const auto& a) -> Scalar { return inverse(a); }, x);
}

bool is_zero(const Scalar& x) {
    return std::visit([](const auto& a) { return a.is_zero(); }, x);
}

bool equals(const Scalar& x, const Scalar& y) {
    check_same(x, y);
    return x == y;
}

bool is_symbolic(const Scalar& x) { return std::holds_alternative<RationalFunction>(x); }

Scalar scalar_int(long long n, const Scalar& like) {
    if (is_symbolic(like)) return RationalFunction(GaussRational(n));
    return GaussRational(n);
}

Scalar to_symbolic(const Scalar& x) {
    if (is_symbolic(x)) return x;
    return RationalFunction(std::get<GaussRational>(x));
}

Scalar scalar_t() { return RationalFunction::t(); }

bool is_integer_inverse(const Scalar& b) {
    if (is_symbolic(b)) return false;
    const auto& v = std::get<GaussRational>(b);
    if (v.im != 0 || v.re == 0) return false;
    Int n = numerator(v.re);
    return n == 1 || n == -1;
}

GaussRational evaluate(const Scalar& r, const GaussRational& point) {
    if (!is_symbolic(r)) return std::get<GaussRational>(r);
    return evaluate(std::get<RationalFunction>(r), point);
}

int compare(const Scalar& x, const Scalar& y) {
    if (x.index() != y.index()) return x.index() < y.index() ? -1 : 1;
    if (std::holds_alternative<GaussRational>(x))
        return compare(std::get<GaussRational>(x), std::get<GaussRational>(y));
    return compare(std::get<RationalFunction>(x), std::get<RationalFunction>(y));
}

std::string to_string(const Scalar& x) {
    return std::visit([](const auto& a) { return to_string(a); }, x);
}

// ---------------------------------------------------------------------------
// Expression parser. Internally everything is a RationalFunction; the result
// is demoted to GaussRational when no 't' appeared.

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    RationalFunction parse(bool& saw_t) {
        RationalFunction v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input at '" + s_.substr(pos_) + "'");
        saw_t = saw_t_;
        return v;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    bool saw_t_ = false;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RationalFunction expr() {
        RationalFunction v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    RationalFunction term() {
        RationalFunction v = factor();
        for (;;) {
            if (eat('*')) v = v * factor();
            else if (eat('/')) v = v / factor();
            else return v;
        }
    }

    RationalFunction factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        RationalFunction v = primary();
        if (eat('^')) {
            long long e = integer_literal();
            RationalFunction base = v;
            v = RationalFunction(GaussRational(1));
            long long n = e < 0 ? -e : e;
            for (long long k = 0; k < n; ++k) v = v * base;
            if (e < 0) v = inverse(v);
        }
        return v;
    }

    long long integer_literal() {
        bool negative = eat('-');
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer exponent");
        long long v = std::stoll(s_.substr(start, pos_ - start));
        return negative ? -v : v;
    }

    RationalFunction primary() {
        char c = peek();
        if (c == '(') {
            eat('(');
            RationalFunction v = expr();
            if (!eat(')')) throw ParseError("missing ')'");
            return v;
        }
        if (c == 'i') {
            ++pos_;
            return RationalFunction(GaussRational(Rational(0), Rational(1)));
        }
        if (c == 't') {
            ++pos_;
            saw_t_ = true;
            return RationalFunction::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalFunction(GaussRational(Rational(Int(s_.substr(start, pos_ - start)))));
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Scalar parse_scalar(const std::string& text, bool force_symbolic) {
    bool saw_t = false;
    RationalFunction v = Parser(text).parse(saw_t);
    if (saw_t || force_symbolic) return v;
    // constant: num is degree <= 0, den == 1
    GaussRational c;
    if (!v.num.is_zero()) c = v.num.coeffs[0];
    return c;
}

}  // namespace prelie
