#include "prelie/gauss_rational.hpp"

#include "prelie/errors.hpp"

namespace prelie {

GaussRational operator+(const GaussRational& x, const GaussRational& y) {
    return {x.re + y.re, x.im + y.im};
}

GaussRational operator-(const GaussRational& x, const GaussRational& y) {
    return {x.re - y.re, x.im - y.im};
}

GaussRational operator-(const GaussRational& x) { return {-x.re, -x.im}; }

GaussRational operator*(const GaussRational& x, const GaussRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

GaussRational inverse(const GaussRational& x) {
    if (x.is_zero()) throw DivisionByZero();
    Rational n = x.re * x.re + x.im * x.im;
    return {x.re / n, -x.im / n};
}

GaussRational operator/(const GaussRational& x, const GaussRational& y) {
    return x * inverse(y);
}

int compare(const GaussRational& x, const GaussRational& y) {
    if (x.re != y.re) return x.re < y.re ? -1 : 1;
    if (x.im != y.im) return x.im < y.im ? -1 : 1;
    return 0;
}

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

namespace {

// imaginary part rendered as a product with 'i'
std::string imag_str(const Rational& r) {
    if (r == 1) return "i";
    if (r == -1) return "-i";
    return to_string(r) + "*i";
}

}  // namespace

std::string to_string(const GaussRational& x) {
    if (x.im == 0) return to_string(x.re);
    if (x.re == 0) return imag_str(x.im);
    std::string s = to_string(x.re);
    if (x.im > 0) s += "+";
    return s + imag_str(x.im);
}

}  // namespace prelie
