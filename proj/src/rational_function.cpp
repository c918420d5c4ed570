#include "prelie/rational_function.hpp"

#include "prelie/errors.hpp"

namespace prelie {

RationalFunction::RationalFunction(Polynomial n, Polynomial d) {
    if (d.is_zero()) throw DivisionByZero();
    if (n.is_zero()) {
        num = Polynomial{};
        den = Polynomial(GaussRational(1));
        return;
    }
    Polynomial g = gcd(n, d);
    if (g.degree() > 0) {
        n = divmod(n, g).first;
        d = divmod(d, g).first;
    }
    GaussRational lead_inv = inverse(d.leading());
    num = lead_inv * n;
    den = lead_inv * d;
}

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
    return {x.num * y.den + y.num * x.den, x.den * y.den};
}

RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
    return {x.num * y.den - y.num * x.den, x.den * y.den};
}

RationalFunction operator-(const RationalFunction& x) {
    RationalFunction out = x;
    out.num = -out.num;
    return out;
}

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
    return {x.num * y.num, x.den * y.den};
}

RationalFunction inverse(const RationalFunction& x) {
    if (x.is_zero()) throw DivisionByZero();
    return {x.den, x.num};
}

RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
    if (y.is_zero()) throw DivisionByZero();
    return {x.num * y.den, x.den * y.num};
}

GaussRational evaluate(const RationalFunction& r, const GaussRational& point) {
    GaussRational d = evaluate(r.den, point);
    if (d.is_zero()) throw PoleAtPoint();
    return evaluate(r.num, point) / d;
}

int compare(const RationalFunction& x, const RationalFunction& y) {
    if (int c = compare(x.num, y.num); c != 0) return c;
    return compare(x.den, y.den);
}

std::string to_string(const RationalFunction& x) {
    if (x.is_zero()) return "0";
    if (x.den == Polynomial(GaussRational(1))) return to_string(x.num);
    return "(" + to_string(x.num) + ")/(" + to_string(x.den) + ")";
}

}  // namespace prelie
