// End-to-end acceptance checks, one line of output per criterion.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "prelie/classify.hpp"
#include "prelie/errors.hpp"
#include "prelie/search.hpp"
#include "prelie/vector_field.hpp"

using namespace prelie;

namespace {

Scalar sym(const char* text) { return parse_scalar(text, true); }
Scalar con(const char* text) { return parse_scalar(text); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Scalar> a_grid() {
    return {con("0"), con("1"), con("-1"), con("2"), con("-2"),
            con("1/2"), con("-1/2"), con("5/3"), con("-5/3")};
}

std::vector<Scalar> b_grid() {
    return {con("0"), con("2/5"), con("-2/5"), con("2"), con("-2"), con("3/7"), con("-3/7")};
}

TableData table_of(int radius, const std::function<Scalar(Degree)>& f,
                   const std::function<Scalar(Degree)>& g) {
    TableData t;
    t.radius = radius;
    for (Degree i = -radius; i <= radius; ++i) {
        t.f.push_back(f(i));
        t.g.push_back(g(i));
    }
    return t;
}

// 1. symbolic defect scans vanish identically at radius 6, under 30 s
bool criterion1(std::string& note) {
    auto t0 = std::chrono::steady_clock::now();
    bool a_ok = defect_scan(StructureMap::closed_a(scalar_t()), 6).empty();
    bool b_ok = defect_scan(StructureMap::closed_b(scalar_t()), 6).empty();
    double dt = seconds_since(t0);
    note = "both scans empty in " + std::to_string(dt) + " s";
    return a_ok && b_ok && dt < 30.0;
}

// 2. bracket constants: a(i-j) for the affine family, (i-j) for B in bar coordinates
bool criterion2(std::string&) {
    StructureMap A = StructureMap::closed_a(scalar_t());
    Scalar b = con("2/5");
    StructureMap B = StructureMap::closed_b(b);
    for (Degree i = -6; i <= 6; ++i)
        for (Degree j = -6; j <= 6; ++j) {
            Element br = bracket(A, Element::basis(i, scalar_t()), Element::basis(j, scalar_t()));
            if (i == j) {
                if (!br.is_zero()) return false;
            } else {
                Scalar expect = mul(scalar_t(), scalar_int(i - j, scalar_t()));
                if (!equals(br.coefficient_at(i + j), expect)) return false;
            }

            Element bar = change_of_basis_B(
                b,
                bracket(B, change_of_basis_B(b, Element::basis(i, b), BarDirection::to_bar),
                        change_of_basis_B(b, Element::basis(j, b), BarDirection::to_bar)),
                BarDirection::from_bar);
            if (!equals(bar.coefficient_at(i + j), scalar_int(i - j, b))) return false;
        }
    return true;
}

// 3. classification round-trip on the parameter grids at radius 8, under 10 s
bool criterion3(std::string& note) {
    auto t0 = std::chrono::steady_clock::now();
    for (const Scalar& a : a_grid()) {
        ClassificationResult r = classify(tabulate(StructureMap::closed_a(a), 8));
        if (r.verdict != Verdict::TypeA || !r.param || !equals(*r.param, a)) return false;
    }
    for (const Scalar& b : b_grid()) {
        ClassificationResult r = classify(tabulate(StructureMap::closed_b(b), 8));
        if (r.verdict != Verdict::TypeB || !r.param || !equals(*r.param, b)) return false;
    }
    double dt = seconds_since(t0);
    note = "16 round-trips in " + std::to_string(dt) + " s";
    return dt < 10.0;
}

// 4. decision-tree branch witnesses
bool criterion4(std::string&) {
    auto one = [](Degree) { return con("1"); };

    // period-2 pattern: the degrees off the even sublattice form an ideal
    StructureMap periodic = StructureMap::table(table_of(
        5, [](Degree i) { return con(i % 2 == 0 ? "1" : "0"); }, one));
    ClassificationResult rp = classify(periodic);
    std::set<Degree> odds{-5, -3, -1, 1, 3, 5};
    if (rp.verdict != Verdict::NotSimpleWindow || rp.ideal_witness != odds) return false;

    // gap d = 2 with f(2) != 1 forces f(k) = 1 - k, the a = -1 member
    StructureMap d2 = StructureMap::table(table_of(
        6, [](Degree i) { return scalar_int(1 - i, con("1")); }, one));
    ClassificationResult rd = classify(d2);
    if (rd.verdict != Verdict::TypeA || !rd.param || !equals(*rd.param, con("-1"))) return false;

    // f supported only at 0: every nonzero degree spans a proper ideal
    StructureMap off = StructureMap::table(table_of(
        4, [](Degree i) { return con(i == 0 ? "1" : "0"); }, one));
    ClassificationResult ro = classify(off);
    return ro.verdict == Verdict::NotSimpleWindow && ro.ideal_witness.size() == 8;
}

// 5. isomorphism suite on the grids at radius 6
bool criterion5(std::string&) {
    for (const Scalar& a : a_grid()) {
        DiagonalMap m = DiagonalMap::flip_a(6, a);
        if (!iso_check(m, StructureMap::closed_a(a), StructureMap::closed_a(neg(a)), 6).empty())
            return false;
    }
    for (const Scalar& b : b_grid()) {
        DiagonalMap m = DiagonalMap::flip_b(6, b);
        if (!iso_check(m, StructureMap::closed_b(b), StructureMap::closed_b(neg(b)), 6).empty())
            return false;
    }
    StructureMap A2 = StructureMap::closed_a(con("2"));
    StructureMap A3 = StructureMap::closed_a(con("3"));
    StructureMap B25 = StructureMap::closed_b(con("2/5"));
    StructureMap B37 = StructureMap::closed_b(con("3/7"));
    Scalar one = con("1");
    return !iso_check(DiagonalMap::flip_a(6, one), A2, A3, 6).empty() &&
           !iso_check(DiagonalMap::flip_b(6, one), A2, A3, 6).empty() &&
           !iso_check(DiagonalMap::flip_a(6, one), B25, B37, 6).empty() &&
           !iso_check(DiagonalMap::flip_b(6, one), B25, B37, 6).empty();
}

// 6. invariants: e_0 o e_0 separates the families, associativity isolates a = 0,
//    and b is recovered from the associativity ratio
bool criterion6(std::string&) {
    for (const Scalar& a : a_grid()) {
        StructureMap S = StructureMap::closed_a(a);
        try {
            InvariantSummary s = invariants_extract(S, 3);
            if (s.e0_square_zero) return false;
            if (s.associative != is_zero(a)) return false;
        } catch (const RatioUndefined&) {
            // a = -1 or -1/2: a triple product of e_1 vanishes, so the ratio
            // is undefined; the e_0 invariant still separates the families
            if (!equals(a, con("-1")) && !equals(a, con("-1/2"))) return false;
            Element e0 = Element::basis(0, a);
            if (product(S, e0, e0).is_zero()) return false;
        }
    }
    for (const Scalar& b : b_grid()) {
        InvariantSummary s = invariants_extract(StructureMap::closed_b(b), 3);
        if (!s.e0_square_zero || s.associative) return false;
        if (!equals(b_from_assoc_ratio(s.assoc_ratio), b)) return false;
    }
    // the inversion formula is an identity in the parameter
    return equals(b_from_assoc_ratio(sym("(1+t)/(2*(1+2*t))")), scalar_t());
}

// 7. right multiplication by e_1 is not locally finite; by e_0 it is diagonal
bool criterion7(std::string&) {
    for (StructureMap S : {StructureMap::closed_a(con("1")), StructureMap::closed_b(con("2/5"))}) {
        Element e1 = Element::basis(1, S.exemplar());
        Element e0 = Element::basis(0, S.exemplar());
        std::vector<Degree> grow = iterate_right_mult(S, e1, 1, 10);
        if (grow.size() != 11) return false;
        for (size_t p = 1; p < grow.size(); ++p)
            if (grow[p] <= grow[p - 1]) return false;
        std::vector<Degree> flat = iterate_right_mult(S, e0, 1, 10);
        for (Degree d : flat)
            if (d != 1) return false;
    }
    return true;
}

// 8. exhaustive radius-2 census over {0, 1, -1, 2, 1/2}, split by the f(0) case.
// Counts below were frozen from the first verified run (each survivor is
// reclassified with an independent defect scan inside classify()).
bool criterion8(std::string& note) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<GaussRational> values = {GaussRational(0), GaussRational(1), GaussRational(-1),
                                         GaussRational(2), GaussRational(Rational(1, 2))};

    SearchConfig ca;
    ca.radius = 2;
    ca.split = CaseSplit::CaseAOnly;
    ca.value_set = values;
    SearchReport ra = run_search(ca);

    SearchConfig cb = ca;
    cb.split = CaseSplit::CaseBOnly;
    SearchReport rb = run_search(cb);

    double dt = seconds_since(t0);
    note = "case A " + std::to_string(ra.prelie_survivors) + "/" +
           std::to_string(ra.total_candidates) + ", case B " +
           std::to_string(rb.prelie_survivors) + "/" + std::to_string(rb.total_candidates) +
           " in " + std::to_string(dt) + " s";
    if (dt >= 600.0) return false;

    for (const SearchReport* r : {&ra, &rb})
        for (const CensusEntry& e : r->census)
            if (e.verdict_key.rfind("TypeA", 0) != 0 && e.verdict_key.rfind("TypeB", 0) != 0 &&
                e.verdict_key.rfind("NotSimpleWindow", 0) != 0 &&
                e.verdict_key.rfind("Inconclusive", 0) != 0)
                return false;

    auto matches = [](const SearchReport& r,
                      const std::vector<std::pair<std::string, unsigned long long>>& golden) {
        if (r.census.size() != golden.size()) return false;
        for (size_t k = 0; k < golden.size(); ++k)
            if (r.census[k].verdict_key != golden[k].first || r.census[k].count != golden[k].second)
                return false;
        return true;
    };

    // Frozen from the first verified run.  Case A keeps only the trivial
    // associative member plus the period-2 and off-zero ideals: every other
    // affine table needs values (3, -2, 3/2, ...) outside the set.  Case B
    // admits no identity-f table for the same reason, so every survivor has a
    // window annihilator.
    std::vector<std::pair<std::string, unsigned long long>> golden_a = {
        {"NotSimpleWindow", 2},
        {"TypeA param=0", 1},
    };
    std::vector<std::pair<std::string, unsigned long long>> golden_b = {
        {"NotSimpleWindow", 2073},
    };
    return matches(ra, golden_a) && matches(rb, golden_b);
}

// 9. vector-field realizations and the symmetrized obstruction off b = 0
bool criterion9(std::string&) {
    if (!verify_realization(realize_A(scalar_t(), 4), StructureMap::closed_a(scalar_t()), 4)
             .empty())
        return false;
    if (!verify_realization(realize_B0(4), StructureMap::closed_b(con("0")), 4).empty())
        return false;
    try {
        realize_A(con("0"), 3);
        return false;
    } catch (const NoInjectionA0&) {
    }
    ObstructionB ob = obstruction_B(scalar_t());
    Scalar c = ob.abstract.coefficient_at(0);
    return !is_zero(c) && equals(c, sym("2*t/(1-t^2)")) && ob.realized.is_zero();
}

// 10. the right-symmetric identity for the covariant product on pure terms
bool criterion10(std::string&) {
    std::vector<VectorField> pool = {
        VectorField::term(sym("1"), scalar_t(), sym("0")),        // x^t d/dx
        VectorField::term(sym("1"), sym("0"), scalar_t()),        // e^{tx} d/dx
        VectorField::term(sym("1"), sym("1+t"), sym("2*t")),      // x^{1+t} e^{2tx} d/dx
        VectorField::term(sym("3"), sym("-t"), sym("1")),
    };
    for (const auto& u : pool)
        for (const auto& v : pool)
            for (const auto& w : pool) {
                VectorField l =
                    sub(vf_product(vf_product(u, v), w), vf_product(u, vf_product(v, w)));
                VectorField r =
                    sub(vf_product(vf_product(u, w), v), vf_product(u, vf_product(w, v)));
                if (!equals(l, r)) return false;
            }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        std::function<bool(std::string&)> run;
    };
    std::vector<Criterion> criteria = {
        {"1 symbolic defect scans", criterion1},
        {"2 bracket constants", criterion2},
        {"3 classification round-trip", criterion3},
        {"4 branch witnesses", criterion4},
        {"5 isomorphism suite", criterion5},
        {"6 invariant extraction", criterion6},
        {"7 right-multiplication growth", criterion7},
        {"8 search census", criterion8},
        {"9 realization suite", criterion9},
        {"10 product identity", criterion10},
    };
    int failures = 0;
    for (auto& c : criteria) {
        std::string note;
        bool ok = false;
        try {
            ok = c.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("%s criterion %s%s%s\n", ok ? "PASS" : "FAIL", c.label,
                    note.empty() ? "" : " -- ", note.c_str());
    }
    return failures == 0 ? 0 : 1;
}
