#include "prelie/element.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace prelie {

std::set<Degree> Element::support() const {
    std::set<Degree> out;
    for (const auto& [d, c] : terms) out.insert(d);
    return out;
}

Degree Element::min_degree() const {
    if (terms.empty()) throw std::logic_error("min_degree of zero element");
    return terms.begin()->first;
}

Degree Element::max_degree() const {
    if (terms.empty()) throw std::logic_error("max_degree of zero element");
    return terms.rbegin()->first;
}

Scalar Element::coefficient_at(Degree i) const {
    auto it = terms.find(i);
    if (it != terms.end()) return it->second;
    if (!terms.empty()) return scalar_int(0, terms.begin()->second);
    return GaussRational(0);
}

Element add(const Element& x, const Element& y) {
    Element out = x;
    for (const auto& [d, c] : y.terms) {
        auto it = out.terms.find(d);
        if (it == out.terms.end()) {
            out.terms.emplace(d, c);
        } else {
            it->second = prelie::add(it->second, c);
            if (is_zero(it->second)) out.terms.erase(it);
        }
    }
    return out;
}

Element neg(const Element& x) {
    Element out = x;
    for (auto& [d, c] : out.terms) c = prelie::neg(c);
    return out;
}

Element sub(const Element& x, const Element& y) { return add(x, neg(y)); }

Element scale(const Scalar& c, const Element& x) {
    Element out;
    if (is_zero(c)) return out;
    for (const auto& [d, v] : x.terms) {
        Scalar s = mul(c, v);
        if (!is_zero(s)) out.terms.emplace(d, std::move(s));
    }
    return out;
}

bool equals(const Element& x, const Element& y) {
    if (x.terms.size() != y.terms.size()) return false;
    auto it = y.terms.begin();
    for (const auto& [d, c] : x.terms) {
        if (it->first != d || !prelie::equals(it->second, c)) return false;
        ++it;
    }
    return true;
}

std::string to_json_string(const Element& x) {
    nlohmann::ordered_json j;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [d, c] : x.terms) j["terms"].push_back({d, to_string(c)});
    return j.dump();
}

std::string to_string(const Element& x) {
    if (x.terms.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : x.terms) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")*e_{" + std::to_string(d) + "}";
    }
    return s;
}

}  // namespace prelie
