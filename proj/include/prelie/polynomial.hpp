#ifndef PRELIE_POLYNOMIAL_HPP
#define PRELIE_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "prelie/gauss_rational.hpp"

namespace prelie {

/// Dense univariate polynomial over Q(i) in the formal parameter t.
/// Coefficients ascending by degree; leading coefficient nonzero; empty = 0.
struct Polynomial {
    std::vector<GaussRational> coeffs;

    Polynomial() = default;
    explicit Polynomial(GaussRational c) {
        if (!c.is_zero()) coeffs.push_back(std::move(c));
    }

    static Polynomial t() { return from_coeffs({GaussRational(0), GaussRational(1)}); }
    static Polynomial from_coeffs(std::vector<GaussRational> cs);

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
    const GaussRational& leading() const { return coeffs.back(); }

    void trim();

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const GaussRational& c, const Polynomial& p);

/// Euclidean division; q must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q);

/// Monic gcd; gcd(0,0) = 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

GaussRational evaluate(const Polynomial& p, const GaussRational& point);

int compare(const Polynomial& p, const Polynomial& q);

std::string to_string(const Polynomial& p);

}  // namespace prelie

#endif
