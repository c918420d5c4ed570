#ifndef PRELIE_CLASSIFY_HPP
#define PRELIE_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "prelie/structure_map.hpp"

namespace prelie {

enum class Verdict { TypeA, TypeB, NotPreLie, NotSimpleWindow, Inconclusive };

std::string to_string(Verdict v);

struct TraceStep {
    std::string kind;  // "scale_g0" | "scale_f0" | "scale_fd" | "reverse"
    std::string detail;
};

struct ClassificationResult {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Scalar> param;                      // TypeA / TypeB
    std::optional<DefectViolation> prelie_witness;    // NotPreLie
    std::set<Degree> ideal_witness;                   // NotSimpleWindow (proper ideal)
    std::optional<Degree> annihilator_witness;        // NotSimpleWindow (annihilator)
    std::string reason;                               // Inconclusive
    std::vector<TraceStep> trace;
};

/// Basis rescalings bringing a table to the g(0)=1 form, then f(0)=1 when
/// f(0) != 0, or f(d)=d for the smallest positive support d when f(0) = 0.
/// Throws AnnihilatorAtZero when g(0) = 0.
std::pair<TableData, std::vector<TraceStep>> normalize(const TableData& t);

/// Full decision procedure for a window table.
ClassificationResult classify(const StructureMap& T);

struct InvariantSummary {
    bool e0_square_zero = false;
    bool associative = false;
    std::vector<Scalar> spectrum;  // eigenvalues of R_{e_0} on e_{-r}..e_r, ascending degree
    Scalar assoc_ratio;            // coeff of e_1 o (e_1 o e_1) over (e_1 o e_1) o e_1
};

/// Isomorphism invariants of a closed-form structure; radius >= 3.
/// Throws RatioUndefined when a triple product of e_1 vanishes.
InvariantSummary invariants_extract(const StructureMap& S, int radius);

/// Recover b from the associativity ratio r = (1+b)/(2(1+2b)).
Scalar b_from_assoc_ratio(const Scalar& r);

/// Graded-diagonal candidate isomorphism, optionally reversing the grading:
/// e_i -> scale(i) e_{+-i}.
struct DiagonalMap {
    bool reverse = false;
    std::map<Degree, Scalar> scales;

    static DiagonalMap flip_a(int radius, const Scalar& like);  // e_i -> e_{-i}
    static DiagonalMap flip_b(int radius, const Scalar& like);  // e_i -> -e_{-i}
};

struct IsoViolation {
    Degree i, j;
    Scalar lhs, rhs;
};

/// Checks phi(e_i o e_j) = phi(e_i) o' phi(e_j) on all window pairs.
std::vector<IsoViolation> iso_check(const DiagonalMap& map, const StructureMap& S1,
                                    const StructureMap& S2, int radius);

std::string to_json_string(const ClassificationResult& r);

}  // namespace prelie

#endif
