#ifndef PRELIE_GAUSS_RATIONAL_HPP
#define PRELIE_GAUSS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace prelie {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of Q(i): re + im*i with exact rational components.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(long long n) : re(n) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    friend bool operator==(const GaussRational&, const GaussRational&) = default;
};

GaussRational operator+(const GaussRational& x, const GaussRational& y);
GaussRational operator-(const GaussRational& x, const GaussRational& y);
GaussRational operator-(const GaussRational& x);
GaussRational operator*(const GaussRational& x, const GaussRational& y);
GaussRational operator/(const GaussRational& x, const GaussRational& y);  // throws DivisionByZero
GaussRational inverse(const GaussRational& x);                            // throws DivisionByZero

/// Total order used for canonical sorting only (no algebraic meaning).
int compare(const GaussRational& x, const GaussRational& y);

/// Renders "p/q", "r/s*i" or "p/q+r/s*i"; parsed back bit-exactly by parse_scalar.
std::string to_string(const GaussRational& x);

std::string to_string(const Rational& r);

}  // namespace prelie

#endif
