#include "prelie/vector_field.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "prelie/errors.hpp"

namespace prelie {

VectorField normalize(std::vector<VectorField::Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (int c = compare(a.alpha, b.alpha); c != 0) return c < 0;
        return compare(a.lambda, b.lambda) < 0;
    });
    VectorField out;
    for (auto& t : terms) {
        if (is_zero(t.c)) continue;
        if (!out.terms.empty() && compare(out.terms.back().alpha, t.alpha) == 0 &&
            compare(out.terms.back().lambda, t.lambda) == 0) {
            out.terms.back().c = add(out.terms.back().c, t.c);
            if (is_zero(out.terms.back().c)) out.terms.pop_back();
        } else {
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

VectorField VectorField::term(Scalar c, Scalar alpha, Scalar lambda) {
    return normalize({{std::move(c), std::move(alpha), std::move(lambda)}});
}

VectorField add(const VectorField& u, const VectorField& v) {
    std::vector<VectorField::Term> all = u.terms;
    all.insert(all.end(), v.terms.begin(), v.terms.end());
    return normalize(std::move(all));
}

VectorField scale(const Scalar& c, const VectorField& u) {
    std::vector<VectorField::Term> all = u.terms;
    for (auto& t : all) t.c = mul(c, t.c);
    return normalize(std::move(all));
}

VectorField sub(const VectorField& u, const VectorField& v) {
    return add(u, scale(scalar_int(-1, v.terms.empty() ? Scalar(GaussRational(0)) : v.terms[0].c),
                        v));
}

bool equals(const VectorField& u, const VectorField& v) {
    if (u.terms.size() != v.terms.size()) return false;
    for (size_t k = 0; k < u.terms.size(); ++k)
        if (compare(u.terms[k].c, v.terms[k].c) != 0 ||
            compare(u.terms[k].alpha, v.terms[k].alpha) != 0 ||
            compare(u.terms[k].lambda, v.terms[k].lambda) != 0)
            return false;
    return true;
}

VectorField derivative(const VectorField& u) {
    std::vector<VectorField::Term> out;
    for (const auto& t : u.terms) {
        // (c x^a e^{lx})' = c a x^{a-1} e^{lx} + c l x^a e^{lx}
        Scalar one = scalar_int(1, t.alpha);
        out.push_back({mul(t.c, t.alpha), sub(t.alpha, one), t.lambda});
        out.push_back({mul(t.c, t.lambda), t.alpha, t.lambda});
    }
    return normalize(std::move(out));
}

VectorField vf_product(const VectorField& u, const VectorField& v) {
    VectorField du = derivative(u);
    std::vector<VectorField::Term> out;
    for (const auto& a : v.terms)
        for (const auto& b : du.terms)
            out.push_back({mul(a.c, b.c), add(a.alpha, b.alpha), add(a.lambda, b.lambda)});
    return normalize(std::move(out));
}

Realization realize_A(const Scalar& a, int radius) {
    if (is_zero(a)) throw NoInjectionA0();
    Realization R;
    R.radius = radius;
    Scalar one = scalar_int(1, a);
    for (Degree i = -radius; i <= radius; ++i) {
        Scalar alpha = add(one, mul(a, scalar_int(i, a)));
        R.assignment.emplace(i, VectorField::term(one, alpha, scalar_int(0, a)));
    }
    return R;
}

Realization realize_B0(int radius, bool symbolic) {
    Realization R;
    R.radius = radius;
    Scalar like = symbolic ? Scalar(RationalFunction(GaussRational(1))) : Scalar(GaussRational(1));
    for (Degree i = -radius; i <= radius; ++i)
        R.assignment.emplace(
            i, VectorField::term(scalar_int(1, like), scalar_int(0, like), scalar_int(i, like)));
    return R;
}

std::vector<RealizationViolation> verify_realization(const Realization& R, const StructureMap& S,
                                                     int radius) {
    if (radius > R.radius) throw std::invalid_argument("realization does not cover the radius");
    std::vector<RealizationViolation> out;
    Scalar like = S.exemplar();
    for (Degree i = -radius; i <= radius; ++i)
        for (Degree j = -radius; j <= radius; ++j) {
            if (i + j < -R.radius || i + j > R.radius) continue;
            VectorField lhs = vf_product(R.assignment.at(i), R.assignment.at(j));
            Element prod = product(S, Element::basis(i, like), Element::basis(j, like));
            VectorField rhs;
            for (const auto& [d, c] : prod.terms) rhs = add(rhs, scale(c, R.assignment.at(d)));
            if (!equals(lhs, rhs)) out.push_back({i, j});
        }
    return out;
}

ObstructionB obstruction_B(const Scalar& b) {
    StructureMap S = StructureMap::closed_b(b);
    ObstructionB out;
    Element e1 = Element::basis(1, b);
    Element em1 = Element::basis(-1, b);
    out.abstract = add(product(S, e1, em1), product(S, em1, e1));
    Realization R = realize_B0(1, is_symbolic(b));
    out.realized =
        add(vf_product(R.assignment.at(1), R.assignment.at(-1)),
            vf_product(R.assignment.at(-1), R.assignment.at(1)));
    out.consistent = out.abstract.is_zero() && out.realized.is_zero();
    return out;
}

std::string to_string(const VectorField& u) {
    if (u.terms.empty()) return "0";
    std::string s;
    for (const auto& t : u.terms) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(t.c) + ")*x^(" + to_string(t.alpha) + ")*exp((" +
             to_string(t.lambda) + ")*x) d/dx";
    }
    return s;
}

std::string to_json_string(const VectorField& u) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& t : u.terms)
        j.push_back({to_string(t.c), to_string(t.alpha), to_string(t.lambda)});
    return j.dump();
}

}  // namespace prelie
