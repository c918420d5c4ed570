#ifndef PRELIE_VECTOR_FIELD_HPP
#define PRELIE_VECTOR_FIELD_HPP

#include <map>
#include <string>
#include <vector>

#include "prelie/structure_map.hpp"

namespace prelie {

/// Formal vector field on the line: sum of c * x^alpha * exp(lambda x) d/dx.
/// x^alpha is a formal symbol with derivation rule alpha * x^(alpha-1);
/// exponents may be any scalar, including symbolic ones.
struct VectorField {
    struct Term {
        Scalar c, alpha, lambda;
    };
    std::vector<Term> terms;  // canonical: sorted by (alpha, lambda), no zero c

    static VectorField term(Scalar c, Scalar alpha, Scalar lambda);

    bool is_zero() const { return terms.empty(); }
};

VectorField normalize(std::vector<VectorField::Term> terms);
VectorField add(const VectorField& u, const VectorField& v);
VectorField sub(const VectorField& u, const VectorField& v);
VectorField scale(const Scalar& c, const VectorField& u);
bool equals(const VectorField& u, const VectorField& v);

/// d/dx applied to the coefficient function of u.
VectorField derivative(const VectorField& u);

/// Covariant-derivative product (u d/dx) o (v d/dx) = (v * u') d/dx.
VectorField vf_product(const VectorField& u, const VectorField& v);

/// Basis assignment e_i -> vector field, on a declared window.
struct Realization {
    int radius = 0;
    std::map<Degree, VectorField> assignment;
};

/// e_i -> x^(1+a i) d/dx; throws NoInjectionA0 when a = 0.
Realization realize_A(const Scalar& a, int radius);

/// e_i -> exp(i x) d/dx. Concrete when symbolic=false, over Q(i)(t) otherwise.
Realization realize_B0(int radius, bool symbolic = false);

struct RealizationViolation {
    Degree i, j;
};

/// Compares vf_product of images against the image of the abstract product.
std::vector<RealizationViolation> verify_realization(const Realization& R, const StructureMap& S,
                                                     int radius);

struct ObstructionB {
    Element abstract;      // e_1 o e_{-1} + e_{-1} o e_1 in B_b: 2b/(1-b^2) e_0
    VectorField realized;  // the matching sum for the exponential realization: 0
    bool consistent = false;
};

ObstructionB obstruction_B(const Scalar& b);

std::string to_string(const VectorField& u);
std::string to_json_string(const VectorField& u);

}  // namespace prelie

#endif
