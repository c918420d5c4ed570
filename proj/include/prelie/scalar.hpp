#ifndef PRELIE_SCALAR_HPP
#define PRELIE_SCALAR_HPP

#include <string>
#include <variant>

#include "prelie/rational_function.hpp"

namespace prelie {

/// Uniform coefficient domain: a concrete Gaussian rational or an element of
/// Q(i)(t). A computation fixes one variant throughout; mixing variants in a
/// binary operation throws MixedVariant.
using Scalar = std::variant<GaussRational, RationalFunction>;

Scalar add(const Scalar& x, const Scalar& y);
Scalar sub(const Scalar& x, const Scalar& y);
Scalar neg(const Scalar& x);
Scalar mul(const Scalar& x, const Scalar& y);
Scalar div(const Scalar& x, const Scalar& y);
Scalar invert(const Scalar& x);
bool is_zero(const Scalar& x);
bool equals(const Scalar& x, const Scalar& y);  // throws MixedVariant

bool is_symbolic(const Scalar& x);

/// Integer n in the same variant as `like`.
Scalar scalar_int(long long n, const Scalar& like);

/// Embed a concrete value into the symbolic variant as a constant.
Scalar to_symbolic(const Scalar& x);

/// The formal parameter t.
Scalar scalar_t();

/// True iff b = 1/k for some nonzero integer k. Symbolic b is generic: false.
bool is_integer_inverse(const Scalar& b);

GaussRational evaluate(const Scalar& r, const GaussRational& point);

int compare(const Scalar& x, const Scalar& y);

std::string to_string(const Scalar& x);

/// Parses the expression grammar over +,-,*,/,^,(),integers,'i','t'.
/// Yields the GaussRational variant when the expression involves no t,
/// the RationalFunction variant otherwise (always, if force_symbolic).
Scalar parse_scalar(const std::string& text, bool force_symbolic = false);

}  // namespace prelie

#endif
