#include "prelie/classify.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "prelie/errors.hpp"

namespace prelie {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::TypeA: return "TypeA";
        case Verdict::TypeB: return "TypeB";
        case Verdict::NotPreLie: return "NotPreLie";
        case Verdict::NotSimpleWindow: return "NotSimpleWindow";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

Scalar& cell(std::vector<Scalar>& arr, int radius, Degree i) {
    return arr[static_cast<size_t>(i + radius)];
}

const Scalar& cell(const std::vector<Scalar>& arr, int radius, Degree i) {
    return arr[static_cast<size_t>(i + radius)];
}

void scale_all(std::vector<Scalar>& arr, const Scalar& factor) {
    for (auto& s : arr) s = mul(s, factor);
}

// smallest positive degree with f != 0, or 0 if none
Degree smallest_positive_support(const TableData& t) {
    for (Degree d = 1; d <= t.radius; ++d)
        if (!is_zero(cell(t.f, t.radius, d))) return d;
    return 0;
}

bool has_negative_support(const TableData& t) {
    for (Degree d = -1; d >= -t.radius; --d)
        if (!is_zero(cell(t.f, t.radius, d))) return true;
    return false;
}

void reverse_grading(TableData& t) {
    std::reverse(t.f.begin(), t.f.end());
    std::reverse(t.g.begin(), t.g.end());
}

}  // namespace

std::pair<TableData, std::vector<TraceStep>> normalize(const TableData& t) {
    TableData out = t;
    std::vector<TraceStep> trace;
    Scalar one = scalar_int(1, out.f.at(0));

    Scalar g0 = cell(out.g, out.radius, 0);
    if (is_zero(g0)) throw AnnihilatorAtZero();
    if (!equals(g0, one)) {
        scale_all(out.g, invert(g0));
        trace.push_back({"scale_g0", to_string(g0)});
    }

    Scalar f0 = cell(out.f, out.radius, 0);
    if (!is_zero(f0)) {
        if (!equals(f0, one)) {
            scale_all(out.f, invert(f0));
            trace.push_back({"scale_f0", to_string(f0)});
        }
    } else if (Degree d = smallest_positive_support(out); d != 0) {
        Scalar factor = div(cell(out.f, out.radius, d), scalar_int(d, one));
        if (!equals(factor, one)) {
            scale_all(out.f, invert(factor));
            trace.push_back({"scale_fd", to_string(factor)});
        }
    }
    return {std::move(out), std::move(trace)};
}

ClassificationResult classify(const StructureMap& T) {
    if (!T.is_table()) return classify(tabulate(T, 8));
    const TableData& orig = T.table_data();
    const int N = orig.radius;
    ClassificationResult res;

    // (1) pre-Lie check
    DefectReport scan = defect_scan(T, N);
    if (!scan.empty()) {
        res.verdict = Verdict::NotPreLie;
        res.prelie_witness = scan.violations.front();
        return res;
    }

    // (2) annihilator
    auto ann = annihilator_window(T, N);
    if (!ann.empty()) {
        res.verdict = Verdict::NotSimpleWindow;
        res.annihilator_witness = *ann.begin();
        return res;
    }

    // (3) normalize g(0)=1
    TableData t = orig;
    Scalar one = scalar_int(1, t.f.at(0));
    Scalar g0 = cell(t.g, N, 0);
    if (!equals(g0, one)) {
        scale_all(t.g, invert(g0));
        res.trace.push_back({"scale_g0", to_string(g0)});
    }

    // f identically zero away from 0: off-zero degrees span a proper ideal
    Degree dpos = smallest_positive_support(t);
    if (dpos == 0 && !has_negative_support(t)) {
        res.verdict = Verdict::NotSimpleWindow;
        for (Degree i = -N; i <= N; ++i)
            if (i != 0) res.ideal_witness.insert(i);
        return res;
    }

    // (4) only-negative support: reverse the grading
    if (dpos == 0) {
        reverse_grading(t);
        res.trace.push_back({"reverse", ""});
        dpos = smallest_positive_support(t);
    }

    Scalar f0 = cell(t.f, N, 0);
    if (!is_zero(f0)) {
        // (5) case f(0) != 0
        if (!equals(f0, one)) {
            scale_all(t.f, invert(f0));
            res.trace.push_back({"scale_f0", to_string(f0)});
        }
        for (Degree k = -N; k <= N; ++k)
            if (!equals(cell(t.g, N, k), one)) {
                res.reason = "g is not identically 1 at degree " + std::to_string(k);
                return res;
            }
        Degree d = smallest_positive_support(t);
        if (d == 1) {
            Scalar a = sub(cell(t.f, N, 1), one);
            for (Degree k = -N; k <= N; ++k) {
                Scalar expect = add(one, mul(a, scalar_int(k, one)));
                if (!equals(cell(t.f, N, k), expect)) {
                    res.reason = "f(k) != 1+ak at degree " + std::to_string(k);
                    return res;
                }
            }
            res.verdict = Verdict::TypeA;
            res.param = a;
            return res;
        }
        Scalar a = sub(cell(t.f, N, d), one);
        if (is_zero(a)) {
            // f(d)=1 with gap: the period-d pattern, whose complement of the
            // multiples of d is an ideal
            for (Degree k = -N; k <= N; ++k) {
                bool multiple = (k % d == 0);
                Scalar expect = multiple ? one : scalar_int(0, one);
                if (!equals(cell(t.f, N, k), expect)) {
                    res.reason = "period-" + std::to_string(d) + " pattern violated at degree " +
                                 std::to_string(k);
                    return res;
                }
            }
            res.verdict = Verdict::NotSimpleWindow;
            for (Degree i = -N; i <= N; ++i)
                if (i % d != 0) res.ideal_witness.insert(i);
            return res;
        }
        if (d == 2) {
            // forced a = -2 and f(k) = 1-k, which is the A family at parameter -1
            Scalar minus_one = scalar_int(-1, one);
            for (Degree k = -N; k <= N; ++k) {
                Scalar expect = add(one, mul(minus_one, scalar_int(k, one)));
                if (!equals(cell(t.f, N, k), expect)) {
                    res.reason = "d=2 branch requires f(k)=1-k, violated at degree " +
                                 std::to_string(k);
                    return res;
                }
            }
            res.verdict = Verdict::TypeA;
            res.param = minus_one;
            return res;
        }
        res.reason = "gap d=" + std::to_string(d) +
                     " >= 3 with f(d) != 1 admits no pre-Lie completion; window cannot decide";
        return res;
    }

    // (6) case f(0) = 0
    Degree d = smallest_positive_support(t);
    Scalar factor = div(cell(t.f, N, d), scalar_int(d, one));
    if (!equals(factor, one)) {
        scale_all(t.f, invert(factor));
        res.trace.push_back({"scale_fd", to_string(factor)});
    }
    for (Degree k = -N; k <= N; ++k)
        if (!equals(cell(t.f, N, k), scalar_int(k, one))) {
            res.reason = "f(k) != k after normalization at degree " + std::to_string(k);
            return res;
        }
    std::vector<Scalar> h(t.g.size());
    for (Degree k = -N; k <= N; ++k) cell(h, N, k) = invert(cell(t.g, N, k));
    Scalar two = scalar_int(2, one);
    for (Degree k = 1; k <= N; ++k)
        if (!equals(add(cell(h, N, k), cell(h, N, -k)), two)) {
            res.reason = "h(j)+h(-j) != 2 at degree " + std::to_string(k);
            return res;
        }
    Scalar b = sub(cell(h, N, 1), one);
    for (Degree k = -N; k <= N; ++k) {
        Scalar expect = add(one, mul(b, scalar_int(k, one)));
        if (!equals(cell(h, N, k), expect)) {
            res.reason = "h(j) != 1+bj at degree " + std::to_string(k);
            return res;
        }
    }
    if (is_integer_inverse(b)) {
        res.reason = "recovered b = " + to_string(b) +
                     " is the inverse of an integer; B_b is undefined beyond the window";
        return res;
    }
    res.verdict = Verdict::TypeB;
    res.param = b;
    return res;
}

InvariantSummary invariants_extract(const StructureMap& S, int radius) {
    if (radius < 3) throw std::invalid_argument("invariants_extract needs radius >= 3");
    InvariantSummary out;
    Scalar like = S.exemplar();
    Element e0 = Element::basis(0, like);
    out.e0_square_zero = product(S, e0, e0).is_zero();

    out.associative = true;
    for (Degree i = -radius; i <= radius && out.associative; ++i)
        for (Degree j = -radius; j <= radius && out.associative; ++j)
            for (Degree k = -radius; k <= radius; ++k) {
                Element ei = Element::basis(i, like);
                Element ej = Element::basis(j, like);
                Element ek = Element::basis(k, like);
                Element assoc = sub(product(S, product(S, ei, ej), ek),
                                    product(S, ei, product(S, ej, ek)));
                if (!assoc.is_zero()) {
                    out.associative = false;
                    break;
                }
            }

    for (Degree i = -radius; i <= radius; ++i) {
        Element ei = Element::basis(i, like);
        out.spectrum.push_back(product(S, ei, e0).coefficient_at(i));
    }

    Element w = Element::basis(1, like);
    Element ww = product(S, w, w);
    Element left = product(S, ww, w);   // (w o w) o w
    Element right = product(S, w, ww);  // w o (w o w)
    if (left.is_zero() || right.is_zero()) throw RatioUndefined();
    out.assoc_ratio = div(right.coefficient_at(3), left.coefficient_at(3));
    return out;
}

Scalar b_from_assoc_ratio(const Scalar& r) {
    // r = (1+b)/(2(1+2b))  =>  b = (1-2r)/(4r-1)
    Scalar one = scalar_int(1, r);
    Scalar num = sub(one, mul(scalar_int(2, r), r));
    Scalar den = sub(mul(scalar_int(4, r), r), one);
    return div(num, den);
}

DiagonalMap DiagonalMap::flip_a(int radius, const Scalar& like) {
    DiagonalMap m;
    m.reverse = true;
    for (Degree i = -radius; i <= radius; ++i) m.scales.emplace(i, scalar_int(1, like));
    return m;
}

DiagonalMap DiagonalMap::flip_b(int radius, const Scalar& like) {
    DiagonalMap m;
    m.reverse = true;
    for (Degree i = -radius; i <= radius; ++i) m.scales.emplace(i, scalar_int(-1, like));
    return m;
}

std::vector<IsoViolation> iso_check(const DiagonalMap& map, const StructureMap& S1,
                                    const StructureMap& S2, int radius) {
    std::vector<IsoViolation> out;
    Degree sign = map.reverse ? -1 : 1;
    for (Degree i = -radius; i <= radius; ++i)
        for (Degree j = -radius; j <= radius; ++j) {
            if (i + j < -radius || i + j > radius) continue;
            // phi(e_i o e_j) has coefficient f1(i) g1(j) c_{i+j} on e_{sign(i+j)}
            Scalar lhs = mul(mul(S1.f_at(i), S1.g_at(j)), map.scales.at(i + j));
            // phi(e_i) o' phi(e_j) has c_i c_j f2(sign i) g2(sign j)
            Scalar rhs = mul(mul(map.scales.at(i), map.scales.at(j)),
                             mul(S2.f_at(sign * i), S2.g_at(sign * j)));
            if (!equals(lhs, rhs)) out.push_back({i, j, lhs, rhs});
        }
    return out;
}

std::string to_json_string(const ClassificationResult& r) {
    nlohmann::ordered_json j;
    j["verdict"] = to_string(r.verdict);
    if (r.param) j["param"] = to_string(*r.param);
    if (r.prelie_witness)
        j["witness"] = {r.prelie_witness->i, r.prelie_witness->j, r.prelie_witness->k,
                        to_string(r.prelie_witness->value)};
    if (!r.ideal_witness.empty()) {
        j["ideal"] = nlohmann::ordered_json::array();
        for (Degree d : r.ideal_witness) j["ideal"].push_back(d);
    }
    if (r.annihilator_witness) j["annihilator_degree"] = *r.annihilator_witness;
    if (!r.reason.empty()) j["reason"] = r.reason;
    j["trace"] = nlohmann::ordered_json::array();
    for (const auto& step : r.trace) j["trace"].push_back({step.kind, step.detail});
    return j.dump();
}

}  // namespace prelie
