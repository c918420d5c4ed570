#ifndef PRELIE_SEARCH_HPP
#define PRELIE_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "prelie/classify.hpp"

namespace prelie {

enum class CaseSplit { All, CaseAOnly, CaseBOnly };

struct SearchConfig {
    int radius = 2;
    std::vector<GaussRational> value_set;
    bool fix_g0 = true;                       // pin g(0) = 1
    CaseSplit split = CaseSplit::All;
    unsigned long long budget = 100'000'000;  // defect evaluations
    bool override_budget = false;
};

struct CensusEntry {
    std::string verdict_key;  // verdict tag plus parameter, e.g. "TypeA a=2"
    unsigned long long count = 0;
    std::string example_table_json;
};

struct SearchReport {
    unsigned long long total_candidates = 0;
    unsigned long long prelie_survivors = 0;
    unsigned long long simple_survivors = 0;  // verdict TypeA, TypeB or Inconclusive
    std::vector<CensusEntry> census;          // sorted by verdict_key
};

/// Exhaustive enumeration of window tables over the value set, with
/// incremental defect pruning; every pre-Lie survivor is classified.
SearchReport run_search(const SearchConfig& cfg);

/// Partial window assignment: unknown cells are nullopt. All assigned scalars
/// must share one variant (promote to the symbolic variant for formal work).
struct PartialTable {
    int radius = 0;
    std::vector<std::optional<Scalar>> f, g;  // index i + radius

    static PartialTable empty(int radius);
    std::optional<Scalar>& f_at(Degree i) { return f[static_cast<size_t>(i + radius)]; }
    std::optional<Scalar>& g_at(Degree i) { return g[static_cast<size_t>(i + radius)]; }
    const std::optional<Scalar>& f_at(Degree i) const { return f[static_cast<size_t>(i + radius)]; }
    const std::optional<Scalar>& g_at(Degree i) const { return g[static_cast<size_t>(i + radius)]; }
};

struct PropagationResult {
    PartialTable table;
    bool contradiction = false;
    std::string contradiction_reason;
};

/// Deterministic extension of a partial assignment using the defect
/// specializations (C_{0,0,k}; the affine recursion for f when f(0) != 0; the
/// quasiperiodic relation and the h-recursion when f(0) = 0). Assumes the
/// annihilator-free setting: g is taken nonvanishing, as in the simple case.
PropagationResult propagate_constraints(const PartialTable& partial);

std::string to_json_string(const SearchReport& r);

}  // namespace prelie

#endif
