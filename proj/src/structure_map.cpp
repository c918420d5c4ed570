#include "prelie/structure_map.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

#include "prelie/errors.hpp"

namespace prelie {

StructureMap StructureMap::closed_a(Scalar a) { return StructureMap(ClosedA{std::move(a)}); }

StructureMap StructureMap::closed_b(Scalar b) {
    if (is_integer_inverse(b))
        throw std::invalid_argument("param is the inverse of an integer: B_b undefined for b = " +
                                    to_string(b));
    return StructureMap(ClosedB{std::move(b)});
}

StructureMap StructureMap::table(TableData t) {
    size_t expect = 2 * static_cast<size_t>(t.radius) + 1;
    if (t.radius < 1 || t.f.size() != expect || t.g.size() != expect)
        throw std::invalid_argument("table arrays must cover -radius..radius");
    for (const auto& s : t.f)
        if (s.index() != t.f[0].index()) throw MixedVariant();
    for (const auto& s : t.g)
        if (s.index() != t.f[0].index()) throw MixedVariant();
    return StructureMap(std::move(t));
}

const Scalar& StructureMap::param() const {
    if (is_closed_a()) return std::get<ClosedA>(v_).a;
    if (is_closed_b()) return std::get<ClosedB>(v_).b;
    throw std::logic_error("param() on table structure");
}

Scalar StructureMap::exemplar() const {
    if (is_table()) return table_data().f.at(0);
    return param();
}

bool StructureMap::in_window(Degree i) const {
    if (!is_table()) return true;
    const auto& t = table_data();
    return i >= -t.radius && i <= t.radius;
}

std::pair<Scalar, Scalar> StructureMap::eval_fg(Degree i) const {
    if (is_closed_a()) {
        const Scalar& a = std::get<ClosedA>(v_).a;
        return {add(scalar_int(1, a), mul(a, scalar_int(i, a))), scalar_int(1, a)};
    }
    if (is_closed_b()) {
        const Scalar& b = std::get<ClosedB>(v_).b;
        Scalar den = add(scalar_int(1, b), mul(b, scalar_int(i, b)));
        return {scalar_int(i, b), invert(den)};
    }
    const auto& t = table_data();
    if (!in_window(i)) throw OutOfWindow(i);
    size_t idx = static_cast<size_t>(i + t.radius);
    return {t.f[idx], t.g[idx]};
}

Scalar StructureMap::f_at(Degree i) const { return eval_fg(i).first; }
Scalar StructureMap::g_at(Degree i) const { return eval_fg(i).second; }

Element product(const StructureMap& S, const Element& x, const Element& y) {
    Element out;
    for (const auto& [i, xi] : x.terms) {
        Scalar fi = S.f_at(i);
        if (is_zero(fi)) continue;
        for (const auto& [j, yj] : y.terms) {
            Scalar gj = S.g_at(j);
            if (S.is_table() && !S.in_window(i + j)) throw OutOfWindow(i + j);
            Scalar c = mul(mul(fi, gj), mul(xi, yj));
            if (is_zero(c)) continue;
            out = add(out, Element::monomial(i + j, std::move(c)));
        }
    }
    return out;
}

Scalar defect(const StructureMap& S, Degree i, Degree j, Degree k) {
    if (S.is_table()) {
        for (Degree d : {i, j, k, i + j, i + k, j + k, i + j + k})
            if (!S.in_window(d)) throw OutOfWindow(d);
    }
    Scalar fi = S.f_at(i);
    Scalar part1 = mul(sub(S.f_at(i + j), S.f_at(i + k)), mul(S.g_at(j), S.g_at(k)));
    Scalar part2 = mul(sub(mul(S.f_at(k), S.g_at(j)), mul(S.f_at(j), S.g_at(k))), S.g_at(j + k));
    return mul(fi, add(part1, part2));
}

namespace {

bool triple_admissible(const StructureMap& S, Degree i, Degree j, Degree k) {
    if (!S.is_table()) return true;
    for (Degree d : {i + j, i + k, j + k, i + j + k})
        if (!S.in_window(d)) return false;
    return true;
}

}  // namespace

DefectReport defect_scan(const StructureMap& S, int radius) {
    if (S.is_table() && radius > S.table_data().radius)
        throw OutOfWindow(radius);
    DefectReport report;
    report.radius = radius;
    for (Degree i = -radius; i <= radius; ++i) {
        Scalar fi = S.f_at(i);
        if (is_zero(fi)) continue;  // C_{i,j,k} carries an overall factor f(i)
        for (Degree j = -radius; j <= radius; ++j)
            for (Degree k = j + 1; k <= radius; ++k) {
                if (!triple_admissible(S, i, j, k)) continue;
                Scalar c = defect(S, i, j, k);
                if (!is_zero(c)) report.violations.push_back({i, j, k, std::move(c)});
            }
    }
    return report;
}

Element bracket(const StructureMap& S, const Element& x, const Element& y) {
    return sub(product(S, x, y), product(S, y, x));
}

Element change_of_basis_B(const Scalar& b, const Element& x, BarDirection direction) {
    Element out;
    for (const auto& [i, c] : x.terms) {
        Scalar factor = add(scalar_int(1, b), mul(b, scalar_int(i, b)));
        if (direction == BarDirection::from_bar) factor = invert(factor);
        out.terms.emplace(i, mul(factor, c));
    }
    return out;
}

std::set<Degree> annihilator_window(const StructureMap& S, int radius) {
    std::set<Degree> out;
    for (Degree j = -radius; j <= radius; ++j)
        if (is_zero(S.g_at(j))) out.insert(j);
    return out;
}

std::set<Degree> ideal_closure(const StructureMap& S, const std::set<Degree>& seeds, int radius) {
    std::set<Degree> closed = seeds;
    std::vector<Degree> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
        Degree s = queue.back();
        queue.pop_back();
        for (Degree d = -radius; d <= radius; ++d) {
            // e_s o e_d hits e_{s+d}
            if (!is_zero(S.f_at(s)) && !is_zero(S.g_at(d))) {
                Degree sum = s + d;
                if (sum >= -radius && sum <= radius && closed.insert(sum).second)
                    queue.push_back(sum);
            }
            // e_d o e_s hits e_{d+s}
            if (!is_zero(S.f_at(d)) && !is_zero(S.g_at(s))) {
                Degree sum = d + s;
                if (sum >= -radius && sum <= radius && closed.insert(sum).second)
                    queue.push_back(sum);
            }
        }
    }
    return closed;
}

std::vector<DefectViolation> derivation_check_e0(const StructureMap& S, int radius) {
    if (!is_zero(S.f_at(0))) throw NotInvariant();
    std::vector<DefectViolation> out;
    Scalar like = S.exemplar();
    Element e0 = Element::basis(0, like);
    for (Degree i = -radius; i <= radius; ++i)
        for (Degree j = -radius; j <= radius; ++j) {
            if (S.is_table() && !S.in_window(i + j)) continue;
            Element ei = Element::basis(i, like);
            Element ej = Element::basis(j, like);
            Element lhs = product(S, product(S, ei, ej), e0);
            Element rhs = add(product(S, product(S, ei, e0), ej),
                              product(S, ei, product(S, ej, e0)));
            Element diff = sub(lhs, rhs);
            if (!diff.is_zero()) out.push_back({i, j, 0, diff.coefficient_at(i + j)});
        }
    return out;
}

std::vector<Degree> iterate_right_mult(const StructureMap& S, const Element& v, Degree start,
                                       int steps) {
    if (S.is_table())
        throw UnsupportedVariant("iterate_right_mult needs a closed-form structure");
    std::vector<Degree> tops;
    Element x = Element::basis(start, S.exemplar());
    tops.push_back(start);
    for (int p = 0; p < steps; ++p) {
        x = product(S, x, v);
        if (x.is_zero())
            throw std::logic_error("iterate hit zero; choose a start per the closed-form proviso");
        tops.push_back(x.max_degree());
    }
    return tops;
}

StructureMap tabulate(const StructureMap& S, int radius) {
    TableData t;
    t.radius = radius;
    for (Degree i = -radius; i <= radius; ++i) {
        auto [f, g] = S.eval_fg(i);
        t.f.push_back(std::move(f));
        t.g.push_back(std::move(g));
    }
    return StructureMap::table(std::move(t));
}

std::string to_json_string(const StructureMap& S) {
    nlohmann::ordered_json j;
    if (S.is_closed_a()) {
        j["family"] = "A";
        j["param"] = to_string(S.param());
    } else if (S.is_closed_b()) {
        j["family"] = "B";
        j["param"] = to_string(S.param());
    } else {
        const auto& t = S.table_data();
        j["family"] = "table";
        j["radius"] = t.radius;
        j["f"] = nlohmann::ordered_json::array();
        j["g"] = nlohmann::ordered_json::array();
        for (const auto& s : t.f) j["f"].push_back(to_string(s));
        for (const auto& s : t.g) j["g"].push_back(to_string(s));
    }
    return j.dump();
}

StructureMap structure_from_json(const std::string& text, bool symbolic) {
    auto j = nlohmann::json::parse(text);
    std::string family = j.at("family").get<std::string>();
    if (family == "A")
        return StructureMap::closed_a(parse_scalar(j.at("param").get<std::string>(), symbolic));
    if (family == "B")
        return StructureMap::closed_b(parse_scalar(j.at("param").get<std::string>(), symbolic));
    if (family != "table") throw ParseError("unknown family '" + family + "'");
    TableData t;
    t.radius = j.at("radius").get<int>();
    for (const auto& s : j.at("f")) t.f.push_back(parse_scalar(s.get<std::string>(), symbolic));
    for (const auto& s : j.at("g")) t.g.push_back(parse_scalar(s.get<std::string>(), symbolic));
    return StructureMap::table(std::move(t));
}

std::string to_json_string(const DefectReport& r) {
    nlohmann::ordered_json j;
    j["radius"] = r.radius;
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : r.violations)
        j["violations"].push_back({v.i, v.j, v.k, to_string(v.value)});
    return j.dump();
}

}  // namespace prelie
