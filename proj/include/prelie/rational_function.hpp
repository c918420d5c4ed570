#ifndef PRELIE_RATIONAL_FUNCTION_HPP
#define PRELIE_RATIONAL_FUNCTION_HPP

#include <string>

#include "prelie/polynomial.hpp"

namespace prelie {

/// Element of Q(i)(t), kept reduced with monic denominator; zero is 0/1.
struct RationalFunction {
    Polynomial num;
    Polynomial den = Polynomial(GaussRational(1));

    RationalFunction() = default;
    explicit RationalFunction(GaussRational c) : num(std::move(c)) {}
    explicit RationalFunction(Polynomial p) : num(std::move(p)) {}
    RationalFunction(Polynomial n, Polynomial d);  // reduces; throws DivisionByZero if d = 0

    static RationalFunction t() { return RationalFunction(Polynomial::t()); }

    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return num == den; }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y);
RationalFunction operator-(const RationalFunction& x, const RationalFunction& y);
RationalFunction operator-(const RationalFunction& x);
RationalFunction operator*(const RationalFunction& x, const RationalFunction& y);
RationalFunction operator/(const RationalFunction& x, const RationalFunction& y);
RationalFunction inverse(const RationalFunction& x);

/// Exact substitution t = point; throws PoleAtPoint if the denominator vanishes there.
GaussRational evaluate(const RationalFunction& r, const GaussRational& point);

int compare(const RationalFunction& x, const RationalFunction& y);

std::string to_string(const RationalFunction& x);

}  // namespace prelie

#endif
