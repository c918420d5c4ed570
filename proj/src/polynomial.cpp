#include "prelie/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "prelie/errors.hpp"

namespace prelie {

void Polynomial::trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

Polynomial Polynomial::from_coeffs(std::vector<GaussRational> cs) {
    Polynomial p;
    p.coeffs = std::move(cs);
    p.trim();
    return p;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<GaussRational> out(std::max(p.coeffs.size(), q.coeffs.size()));
    for (size_t k = 0; k < out.size(); ++k) {
        if (k < p.coeffs.size()) out[k] = out[k] + p.coeffs[k];
        if (k < q.coeffs.size()) out[k] = out[k] + q.coeffs[k];
    }
    return Polynomial::from_coeffs(std::move(out));
}

Polynomial operator-(const Polynomial& p) {
    Polynomial out = p;
    for (auto& c : out.coeffs) c = -c;
    return out;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<GaussRational> out(p.coeffs.size() + q.coeffs.size() - 1);
    for (size_t a = 0; a < p.coeffs.size(); ++a)
        for (size_t b = 0; b < q.coeffs.size(); ++b)
            out[a + b] = out[a + b] + p.coeffs[a] * q.coeffs[b];
    return Polynomial::from_coeffs(std::move(out));
}

Polynomial operator*(const GaussRational& c, const Polynomial& p) {
    if (c.is_zero()) return {};
    Polynomial out = p;
    for (auto& x : out.coeffs) x = c * x;
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw DivisionByZero();
    Polynomial rem = p;
    if (p.degree() < q.degree()) return {Polynomial{}, rem};
    std::vector<GaussRational> quot(p.degree() - q.degree() + 1);
    GaussRational lead_inv = inverse(q.leading());
    while (!rem.is_zero() && rem.degree() >= q.degree()) {
        int shift = rem.degree() - q.degree();
        GaussRational c = rem.leading() * lead_inv;
        quot[shift] = c;
        // rem -= c * t^shift * q
        for (size_t k = 0; k < q.coeffs.size(); ++k)
            rem.coeffs[k + shift] = rem.coeffs[k + shift] - c * q.coeffs[k];
        rem.trim();
    }
    return {Polynomial::from_coeffs(std::move(quot)), rem};
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    Polynomial a = p, b = q;
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = inverse(a.leading()) * a;  // monic
    return a;
}

GaussRational evaluate(const Polynomial& p, const GaussRational& point) {
    GaussRational acc;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * point + *it;
    return acc;
}

int compare(const Polynomial& p, const Polynomial& q) {
    if (p.coeffs.size() != q.coeffs.size()) return p.coeffs.size() < q.coeffs.size() ? -1 : 1;
    for (size_t k = 0; k < p.coeffs.size(); ++k)
        if (int c = compare(p.coeffs[k], q.coeffs[k]); c != 0) return c;
    return 0;
}

namespace {

std::string term_str(const GaussRational& c, int deg) {
    std::string var;
    if (deg == 1) var = "t";
    else if (deg > 1) var = "t^" + std::to_string(deg);
    if (var.empty()) {
        // constant term; parenthesize a genuinely complex value inside a sum
        if (c.re != 0 && c.im != 0) return "(" + to_string(c) + ")";
        return to_string(c);
    }
    if (c.is_one()) return var;
    if (c == GaussRational(-1)) return "-" + var;
    if (c.re != 0 && c.im != 0) return "(" + to_string(c) + ")*" + var;
    return to_string(c) + "*" + var;
}

}  // namespace

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int deg = p.degree(); deg >= 0; --deg) {
        const GaussRational& c = p.coeffs[deg];
        if (c.is_zero()) continue;
        std::string term = term_str(c, deg);
        if (s.empty()) {
            s = term;
        } else if (term.front() == '-') {
            s += term;
        } else {
            s += "+" + term;
        }
    }
    return s;
}

}  // namespace prelie
