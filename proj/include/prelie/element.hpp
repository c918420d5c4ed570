#ifndef PRELIE_ELEMENT_HPP
#define PRELIE_ELEMENT_HPP

#include <map>
#include <set>
#include <string>

#include "prelie/scalar.hpp"

namespace prelie {

using Degree = long long;

/// Finitely supported Laurent-indexed vector sum lambda_i e_i.
/// No stored coefficient is zero; iteration is in ascending degree.
struct Element {
    std::map<Degree, Scalar> terms;

    Element() = default;

    static Element basis(Degree i, const Scalar& like) {
        Element e;
        e.terms.emplace(i, scalar_int(1, like));
        return e;
    }

    static Element monomial(Degree i, Scalar c) {
        Element e;
        if (!prelie::is_zero(c)) e.terms.emplace(i, std::move(c));
        return e;
    }

    bool is_zero() const { return terms.empty(); }

    std::set<Degree> support() const;
    Degree min_degree() const;  // requires nonzero
    Degree max_degree() const;  // requires nonzero

    /// Zero of a matching variant when the degree is absent.
    Scalar coefficient_at(Degree i) const;
};

Element add(const Element& x, const Element& y);
Element sub(const Element& x, const Element& y);
Element neg(const Element& x);
Element scale(const Scalar& c, const Element& x);
bool equals(const Element& x, const Element& y);

/// `{"terms": [[degree, scalar-string], ...]}` sorted by degree.
std::string to_json_string(const Element& x);

std::string to_string(const Element& x);

}  // namespace prelie

#endif
