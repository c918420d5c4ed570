#include "prelie/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>

#include "prelie/errors.hpp"

namespace prelie {

namespace {

struct Cell {
    bool is_f;
    Degree degree;
};

struct Triple {
    Degree i, j, k;
};

// C_{i,j,k} over concrete Gaussian rational tables, straight off the arrays.
GaussRational defect_concrete(const std::vector<GaussRational>& f,
                              const std::vector<GaussRational>& g, int N, Degree i, Degree j,
                              Degree k) {
    auto F = [&](Degree d) -> const GaussRational& { return f[static_cast<size_t>(d + N)]; };
    auto G = [&](Degree d) -> const GaussRational& { return g[static_cast<size_t>(d + N)]; };
    return F(i) * ((F(i + j) - F(i + k)) * G(j) * G(k) +
                   (F(k) * G(j) - F(j) * G(k)) * G(j + k));
}

bool admissible(int N, Degree i, Degree j, Degree k) {
    for (Degree d : {i + j, i + k, j + k, i + j + k})
        if (d < -N || d > N) return false;
    return true;
}

}  // namespace

SearchReport run_search(const SearchConfig& cfg) {
    if (cfg.value_set.empty()) throw std::invalid_argument("value_set must be nonempty");
    {
        auto dedup = cfg.value_set;
        std::sort(dedup.begin(), dedup.end(),
                  [](const GaussRational& a, const GaussRational& b) { return compare(a, b) < 0; });
        if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
            throw std::invalid_argument("value_set must be duplicate-free");
    }
    const int N = cfg.radius;
    const size_t width = 2 * static_cast<size_t>(N) + 1;

    std::vector<GaussRational> f(width), g(width);
    std::vector<bool> f_fixed(width, false), g_fixed(width, false);
    auto fix_f = [&](Degree d, GaussRational v) {
        f[static_cast<size_t>(d + N)] = std::move(v);
        f_fixed[static_cast<size_t>(d + N)] = true;
    };
    auto fix_g = [&](Degree d, GaussRational v) {
        g[static_cast<size_t>(d + N)] = std::move(v);
        g_fixed[static_cast<size_t>(d + N)] = true;
    };

    if (cfg.fix_g0 || cfg.split != CaseSplit::All) fix_g(0, GaussRational(1));
    if (cfg.split == CaseSplit::CaseAOnly) {
        fix_f(0, GaussRational(1));
        for (Degree d = -N; d <= N; ++d)
            if (d != 0) fix_g(d, GaussRational(1));
    } else if (cfg.split == CaseSplit::CaseBOnly) {
        fix_f(0, GaussRational(0));
    }

    // free cells ordered by |degree| so constraint triples complete early
    std::vector<Cell> cells;
    for (int level = 0; level <= N; ++level)
        for (Degree d : level == 0 ? std::vector<Degree>{0} : std::vector<Degree>{level, -level}) {
            if (!f_fixed[static_cast<size_t>(d + N)]) cells.push_back({true, d});
            if (!g_fixed[static_cast<size_t>(d + N)]) cells.push_back({false, d});
        }

    // candidate count and budget
    Int candidates = 1;
    for (size_t c = 0; c < cells.size(); ++c) candidates *= Int(cfg.value_set.size());

    std::vector<Triple> triples;
    for (Degree i = -N; i <= N; ++i)
        for (Degree j = -N; j <= N; ++j)
            for (Degree k = j + 1; k <= N; ++k)
                if (admissible(N, i, j, k)) triples.push_back({i, j, k});

    Int estimate = candidates * Int(triples.size());
    if (!cfg.override_budget && estimate > Int(cfg.budget))
        throw BudgetExceeded(estimate.convert_to<unsigned long long>());

    // bucket each triple at the assignment depth where it becomes determined
    auto cell_pos = [&](bool is_f, Degree d) -> int {
        size_t idx = static_cast<size_t>(d + N);
        if (is_f ? f_fixed[idx] : g_fixed[idx]) return -1;
        for (size_t p = 0; p < cells.size(); ++p)
            if (cells[p].is_f == is_f && cells[p].degree == d) return static_cast<int>(p);
        return -1;
    };
    std::vector<std::vector<Triple>> buckets(cells.size() + 1);
    for (const Triple& tr : triples) {
        int pos = -1;
        for (Degree d : {tr.i, tr.i + tr.j, tr.i + tr.k, tr.j, tr.k})
            pos = std::max(pos, cell_pos(true, d));
        for (Degree d : {tr.j, tr.k, tr.j + tr.k})
            pos = std::max(pos, cell_pos(false, d));
        buckets[static_cast<size_t>(pos + 1)].push_back(tr);
    }

    SearchReport report;
    report.total_candidates = candidates.convert_to<unsigned long long>();
    std::map<std::string, CensusEntry> census;

    auto classify_survivor = [&](void) {
        ++report.prelie_survivors;
        TableData td;
        td.radius = N;
        for (size_t idx = 0; idx < width; ++idx) {
            td.f.push_back(f[idx]);
            td.g.push_back(g[idx]);
        }
        StructureMap table = StructureMap::table(td);
        // classify reruns its own defect scan, an independent recheck of the
        // pruned enumeration path
        ClassificationResult res = classify(table);
        if (res.verdict == Verdict::NotPreLie)
            throw std::logic_error("search/classify disagree on the pre-Lie check");
        if (res.verdict == Verdict::TypeA || res.verdict == Verdict::TypeB ||
            res.verdict == Verdict::Inconclusive)
            ++report.simple_survivors;
        std::string key = to_string(res.verdict);
        if (res.param) key += " param=" + to_string(*res.param);
        auto [it, fresh] = census.try_emplace(key);
        it->second.verdict_key = key;
        ++it->second.count;
        if (fresh) it->second.example_table_json = to_json_string(table);
    };

    // depth-first enumeration with incremental defect pruning
    std::function<void(size_t)> dfs = [&](size_t depth) {
        for (const Triple& tr : buckets[depth])
            if (!defect_concrete(f, g, N, tr.i, tr.j, tr.k).is_zero()) return;
        if (depth == cells.size()) {
            classify_survivor();
            return;
        }
        const Cell& c = cells[depth];
        size_t idx = static_cast<size_t>(c.degree + N);
        for (const GaussRational& v : cfg.value_set) {
            (c.is_f ? f : g)[idx] = v;
            dfs(depth + 1);
        }
    };
    dfs(0);

    for (auto& [key, entry] : census) report.census.push_back(std::move(entry));
    return report;
}

// ---------------------------------------------------------------------------
// Constraint propagation, replaying the proof's specializations.

PartialTable PartialTable::empty(int radius) {
    PartialTable p;
    p.radius = radius;
    p.f.resize(2 * static_cast<size_t>(radius) + 1);
    p.g.resize(2 * static_cast<size_t>(radius) + 1);
    return p;
}

namespace {

// net coefficients of a linear relation sum c_d * table(d) = 0
using LinearRelation = std::map<Degree, long long>;

// Solve against known values. Returns false on contradiction.
bool apply_relation(const LinearRelation& rel, std::vector<std::optional<Scalar>>& arr, int N,
                    const Scalar& like, bool& changed, std::string& why,
                    const char* table_name) {
    Scalar known_sum = scalar_int(0, like);
    Degree unknown = 0;
    long long unknown_coeff = 0;
    int unknown_count = 0;
    for (const auto& [d, c] : rel) {
        if (c == 0) continue;
        const auto& v = arr[static_cast<size_t>(d + N)];
        if (v) {
            known_sum = add(known_sum, mul(scalar_int(c, like), *v));
        } else {
            ++unknown_count;
            unknown = d;
            unknown_coeff = c;
        }
    }
    if (unknown_count == 0) {
        if (!is_zero(known_sum)) {
            why = std::string("inconsistent relation on ") + table_name;
            return false;
        }
        return true;
    }
    if (unknown_count > 1) return true;  // underdetermined instance
    Scalar value = div(neg(known_sum), scalar_int(unknown_coeff, like));
    arr[static_cast<size_t>(unknown + N)] = value;
    changed = true;
    return true;
}

}  // namespace

PropagationResult propagate_constraints(const PartialTable& partial) {
    PropagationResult res;
    res.table = partial;
    const int N = res.table.radius;
    auto fail = [&](std::string why) {
        res.contradiction = true;
        res.contradiction_reason = std::move(why);
        return res;
    };

    if (!res.table.g_at(0) || !res.table.f_at(0))
        throw std::invalid_argument("propagation needs g(0) and f(0) assigned");
    Scalar like = *res.table.g_at(0);
    Scalar one = scalar_int(1, like);
    if (!equals(*res.table.g_at(0), one))
        throw std::invalid_argument("propagation expects the g(0)=1 normalization");

    const bool case_a = !is_zero(*res.table.f_at(0));

    bool changed = true;
    while (changed) {
        changed = false;
        std::string why;

        if (case_a) {
            // C_{0,0,k} = g(k)(f(0) - f(0)g(k)) up to the nonzero factor f(0):
            // with g nonvanishing this pins g(k) = f(0)/f(0) ... = 1 when f(0)=1,
            // and more generally g(k) = 1 after the g(0) normalization.
            for (Degree k = -N; k <= N; ++k) {
                auto& gk = res.table.g_at(k);
                if (!gk) {
                    gk = one;
                    changed = true;
                } else if (is_zero(*gk)) {
                    return fail("g(" + std::to_string(k) + ") = 0 puts e_k in the annihilator");
                } else if (!equals(*gk, one)) {
                    return fail("C_{0,0,k} forces g(" + std::to_string(k) + ") = 1");
                }
            }
            // f(i)(f(i+j) - f(j) - f(i+k) + f(k)) = 0 for f(i) known nonzero
            for (Degree i = -N; i <= N; ++i) {
                const auto& fi = res.table.f_at(i);
                if (!fi || is_zero(*fi)) continue;
                for (Degree j = -N; j <= N; ++j)
                    for (Degree k = -N; k <= N; ++k) {
                        if (i + j < -N || i + j > N || i + k < -N || i + k > N) continue;
                        LinearRelation rel;
                        rel[i + j] += 1;
                        rel[j] -= 1;
                        rel[i + k] -= 1;
                        rel[k] += 1;
                        if (!apply_relation(rel, res.table.f, N, like, changed, why, "f"))
                            return fail(why + " (i=" + std::to_string(i) +
                                        ",j=" + std::to_string(j) + ",k=" + std::to_string(k) +
                                        ")");
                    }
            }
        } else {
            // f(i)(f(i+j) - f(i) - f(j)) = 0 for f(i) known nonzero
            for (Degree i = -N; i <= N; ++i) {
                const auto& fi = res.table.f_at(i);
                if (!fi || is_zero(*fi)) continue;
                for (Degree j = -N; j <= N; ++j) {
                    if (i + j < -N || i + j > N) continue;
                    LinearRelation rel;
                    rel[i + j] += 1;
                    rel[i] -= 1;
                    rel[j] -= 1;
                    if (!apply_relation(rel, res.table.f, N, like, changed, why, "f"))
                        return fail(why + " (i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                    ")");
                }
            }
            // once f is the identity on the window, the h = 1/g recursion:
            // k(h(j+k) - h(k)) = j(h(j+k) - h(j))
            bool f_is_identity = true;
            for (Degree i = -N; i <= N && f_is_identity; ++i) {
                const auto& fi = res.table.f_at(i);
                if (!fi || !equals(*fi, scalar_int(i, like))) f_is_identity = false;
            }
            if (f_is_identity) {
                std::vector<std::optional<Scalar>> h(res.table.g.size());
                for (Degree d = -N; d <= N; ++d) {
                    const auto& gd = res.table.g_at(d);
                    if (!gd) continue;
                    if (is_zero(*gd))
                        return fail("g(" + std::to_string(d) + ") = 0 puts e_d in the annihilator");
                    h[static_cast<size_t>(d + N)] = invert(*gd);
                }
                bool h_changed = true;
                while (h_changed) {
                    h_changed = false;
                    for (Degree j = -N; j <= N; ++j)
                        for (Degree k = -N; k <= N; ++k) {
                            if (j == k || j + k < -N || j + k > N) continue;
                            LinearRelation rel;
                            rel[j + k] += k - j;
                            rel[k] -= k;
                            rel[j] += j;
                            if (!apply_relation(rel, h, N, like, h_changed, why, "h"))
                                return fail(why + " (j=" + std::to_string(j) +
                                            ",k=" + std::to_string(k) + ")");
                        }
                }
                for (Degree d = -N; d <= N; ++d) {
                    const auto& hd = h[static_cast<size_t>(d + N)];
                    if (!hd || res.table.g_at(d)) continue;
                    if (is_zero(*hd))
                        return fail("h(" + std::to_string(d) + ") = 0 would make g infinite");
                    res.table.g_at(d) = invert(*hd);
                    changed = true;
                }
            }
        }
    }

    // final consistency sweep over fully-determined defect instances
    for (Degree i = -N; i <= N; ++i)
        for (Degree j = -N; j <= N; ++j)
            for (Degree k = j + 1; k <= N; ++k) {
                if (!admissible(N, i, j, k)) continue;
                bool known = true;
                for (Degree d : {i, i + j, i + k, j, k})
                    if (!res.table.f_at(d)) known = false;
                for (Degree d : {j, k, j + k})
                    if (!res.table.g_at(d)) known = false;
                if (!known) continue;
                auto F = [&](Degree d) { return *res.table.f_at(d); };
                auto G = [&](Degree d) { return *res.table.g_at(d); };
                Scalar c = mul(F(i), add(mul(sub(F(i + j), F(i + k)), mul(G(j), G(k))),
                                         mul(sub(mul(F(k), G(j)), mul(F(j), G(k))), G(j + k))));
                if (!is_zero(c))
                    return fail("C_{" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + "} = " + to_string(c) + " != 0");
            }
    return res;
}

std::string to_json_string(const SearchReport& r) {
    nlohmann::ordered_json j;
    j["total_candidates"] = r.total_candidates;
    j["prelie_survivors"] = r.prelie_survivors;
    j["simple_survivors"] = r.simple_survivors;
    j["census"] = nlohmann::ordered_json::array();
    for (const auto& e : r.census) {
        nlohmann::ordered_json entry;
        entry["verdict"] = e.verdict_key;
        entry["count"] = e.count;
        entry["example"] = nlohmann::ordered_json::parse(e.example_table_json);
        j["census"].push_back(entry);
    }
    return j.dump();
}

}  // namespace prelie
