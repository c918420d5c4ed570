#ifndef PRELIE_STRUCTURE_MAP_HPP
#define PRELIE_STRUCTURE_MAP_HPP

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "prelie/element.hpp"

namespace prelie {

/// e_i o e_j = (1 + a i) e_{i+j}
struct ClosedA {
    Scalar a;
};

/// e_i o e_j = i / (1 + b j) e_{i+j}; b must not be the inverse of an integer.
struct ClosedB {
    Scalar b;
};

/// Finite window table: f and g tabulated on degrees -radius .. radius.
struct TableData {
    int radius = 0;
    std::vector<Scalar> f;  // index i + radius
    std::vector<Scalar> g;
};

class StructureMap {
public:
    static StructureMap closed_a(Scalar a);
    static StructureMap closed_b(Scalar b);  // throws invalid_argument for bad b
    static StructureMap table(TableData t);  // throws invalid_argument on malformed arrays

    bool is_table() const { return std::holds_alternative<TableData>(v_); }
    bool is_closed_a() const { return std::holds_alternative<ClosedA>(v_); }
    bool is_closed_b() const { return std::holds_alternative<ClosedB>(v_); }
    const TableData& table_data() const { return std::get<TableData>(v_); }
    const Scalar& param() const;  // closed families only

    /// A scalar whose variant every coefficient of this structure follows.
    Scalar exemplar() const;

    /// (f(i), g(i)); throws OutOfWindow for table access beyond the radius.
    std::pair<Scalar, Scalar> eval_fg(Degree i) const;

    Scalar f_at(Degree i) const;
    Scalar g_at(Degree i) const;

    /// True when every f/g access needed for degree i is defined.
    bool in_window(Degree i) const;

private:
    std::variant<ClosedA, ClosedB, TableData> v_;
    explicit StructureMap(std::variant<ClosedA, ClosedB, TableData> v) : v_(std::move(v)) {}
};

struct DefectViolation {
    Degree i, j, k;
    Scalar value;
};

struct DefectReport {
    int radius = 0;
    std::vector<DefectViolation> violations;
    bool empty() const { return violations.empty(); }
};

/// Bilinear product induced by e_i o e_j = f(i) g(j) e_{i+j}.
Element product(const StructureMap& S, const Element& x, const Element& y);

/// Coefficient of e_{i+j+k} in the pre-Lie associator difference:
/// C_{i,j,k} = f(i)[(f(i+j)-f(i+k)) g(j) g(k) + (f(k)g(j)-f(j)g(k)) g(j+k)].
Scalar defect(const StructureMap& S, Degree i, Degree j, Degree k);

/// Exhaustive scan over admissible triples with j < k, lexicographic order.
DefectReport defect_scan(const StructureMap& S, int radius);

/// x o y - y o x.
Element bracket(const StructureMap& S, const Element& x, const Element& y);

enum class BarDirection { to_bar, from_bar };

/// Degreewise rescaling by (1 + b i) (to_bar) or its inverse (from_bar).
Element change_of_basis_B(const Scalar& b, const Element& x, BarDirection direction);

/// Window degrees j with g(j) = 0.
std::set<Degree> annihilator_window(const StructureMap& S, int radius);

/// Smallest degree set containing seeds closed under s -> s+j (f(s)g(j) != 0)
/// and s -> i+s (f(i)g(s) != 0) within the window.
std::set<Degree> ideal_closure(const StructureMap& S, const std::set<Degree>& seeds, int radius);

/// Violations of the derivation law for R_{e_0}; requires f(0) = 0.
std::vector<DefectViolation> derivation_check_e0(const StructureMap& S, int radius);

/// Top degrees of R_v^p(e_start) for p = 0..steps. Closed-form variants only.
std::vector<Degree> iterate_right_mult(const StructureMap& S, const Element& v, Degree start,
                                       int steps);

/// Window table of a closed-form structure (identity on tables of that radius).
StructureMap tabulate(const StructureMap& S, int radius);

/// `{"family":"A"|"B"|"table","param":...,"radius":...,"f":[...],"g":[...]}`.
std::string to_json_string(const StructureMap& S);
StructureMap structure_from_json(const std::string& text, bool symbolic = false);

std::string to_json_string(const DefectReport& r);

}  // namespace prelie

#endif
