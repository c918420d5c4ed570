#include <doctest.h>

#include <vector>

#include "prelie/errors.hpp"
#include "prelie/vector_field.hpp"

using namespace prelie;

namespace {

Scalar sym(const char* text) { return parse_scalar(text, true); }

VectorField pure(const char* c, const char* alpha, const char* lambda) {
    return VectorField::term(sym(c), sym(alpha), sym(lambda));
}

}  // namespace

TEST_CASE("vector field normal form") {
    VectorField u = add(pure("1", "t", "0"), pure("2", "t", "0"));
    CHECK(equals(u, pure("3", "t", "0")));
    CHECK(sub(u, u).is_zero());
    CHECK(vf_product(pure("1", "0", "0"), pure("5", "3", "2")).is_zero());  // d/dx has no slope
}

TEST_CASE("derivative rule") {
    // (x^t e^{2x})' = t x^{t-1} e^{2x} + 2 x^t e^{2x}
    VectorField d = derivative(pure("1", "t", "2"));
    VectorField expect = add(pure("t", "t-1", "2"), pure("2", "t", "2"));
    CHECK(equals(d, expect));
}

TEST_CASE("product examples") {
    // (x^{1+t} d/dx) o itself = (1+t) x^{1+2t} d/dx
    VectorField u = pure("1", "1+t", "0");
    CHECK(equals(vf_product(u, u), pure("1+t", "1+2*t", "0")));

    // (e^x d/dx) o (e^{2x} d/dx) = e^{3x} d/dx
    CHECK(equals(vf_product(pure("1", "0", "1"), pure("1", "0", "2")), pure("1", "0", "3")));
}

TEST_CASE("covariant product satisfies the right-symmetric identity") {
    std::vector<VectorField> fields = {pure("1", "t", "0"), pure("2", "1+t", "1"),
                                       pure("1/2", "0", "t"), pure("1", "2", "-1"),
                                       add(pure("1", "t", "0"), pure("1", "0", "1"))};
    for (const auto& u : fields)
        for (const auto& v : fields)
            for (const auto& w : fields) {
                VectorField l = sub(vf_product(vf_product(u, v), w),
                                    vf_product(u, vf_product(v, w)));
                VectorField r = sub(vf_product(vf_product(u, w), v),
                                    vf_product(u, vf_product(w, v)));
                CHECK(equals(l, r));
            }
}

TEST_CASE("realization of the affine family") {
    CHECK_THROWS_AS(realize_A(Scalar(GaussRational(0)), 3), NoInjectionA0);

    Scalar two = GaussRational(2);
    Realization R = realize_A(two, 4);
    CHECK(verify_realization(R, StructureMap::closed_a(two), 4).empty());

    // symbolic parameter: the check is an identity in the parameter
    Realization Rs = realize_A(scalar_t(), 3);
    CHECK(verify_realization(Rs, StructureMap::closed_a(scalar_t()), 3).empty());
}

TEST_CASE("exponential realization of B_0 and its failure off b=0") {
    Realization R = realize_B0(4);
    CHECK(verify_realization(R, StructureMap::closed_b(Scalar(GaussRational(0))), 4).empty());

    // rescaling one basis vector must break the check
    Realization bad = realize_B0(2);
    bad.assignment.at(1) = scale(Scalar(GaussRational(2)), bad.assignment.at(1));
    CHECK_FALSE(verify_realization(bad, StructureMap::closed_b(Scalar(GaussRational(0))), 2).empty());

    // and e^{ix} images do not realize B_b for b != 0
    CHECK_FALSE(
        verify_realization(realize_B0(2), StructureMap::closed_b(Scalar(GaussRational(2))), 2)
            .empty());
}

TEST_CASE("symmetrized obstruction") {
    ObstructionB at0 = obstruction_B(Scalar(GaussRational(0)));
    CHECK(at0.consistent);
    CHECK(at0.abstract.is_zero());
    CHECK(at0.realized.is_zero());

    ObstructionB at25 = obstruction_B(Scalar(GaussRational(Rational(2, 5))));
    CHECK_FALSE(at25.consistent);
    CHECK(at25.realized.is_zero());
    CHECK(equals(at25.abstract.coefficient_at(0), Scalar(GaussRational(Rational(20, 21)))));
    CHECK(at25.abstract.support() == std::set<Degree>{0});

    ObstructionB sym_b = obstruction_B(scalar_t());
    CHECK_FALSE(sym_b.consistent);
    CHECK(equals(sym_b.abstract.coefficient_at(0), sym("2*t/(1-t^2)")));
}

TEST_CASE("rendering") {
    CHECK(to_string(VectorField{}) == "0");
    CHECK(to_json_string(pure("1", "0", "3")) == R"([["1","0","3"]])");
}
