#ifndef PRELIE_ERRORS_HPP
#define PRELIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prelie {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero scalar") {}
};

struct MixedVariant : std::runtime_error {
    MixedVariant() : std::runtime_error("operands use different scalar variants") {}
};

struct PoleAtPoint : std::runtime_error {
    PoleAtPoint() : std::runtime_error("denominator vanishes at evaluation point") {}
};

struct OutOfWindow : std::runtime_error {
    explicit OutOfWindow(long long degree)
        : std::runtime_error("degree " + std::to_string(degree) + " outside table window") {}
};

struct NotInvariant : std::runtime_error {
    NotInvariant() : std::runtime_error("e_0 is not invariant: f(0) != 0") {}
};

struct UnsupportedVariant : std::runtime_error {
    explicit UnsupportedVariant(const std::string& what) : std::runtime_error(what) {}
};

struct RatioUndefined : std::runtime_error {
    RatioUndefined() : std::runtime_error("triple product vanishes, ratio undefined") {}
};

struct AnnihilatorAtZero : std::runtime_error {
    AnnihilatorAtZero() : std::runtime_error("g(0) = 0: e_0 lies in the annihilator") {}
};

struct BudgetExceeded : std::runtime_error {
    unsigned long long estimate;
    explicit BudgetExceeded(unsigned long long est)
        : std::runtime_error("search budget exceeded: estimated " + std::to_string(est) +
                             " defect evaluations"),
          estimate(est) {}
};

struct NoInjectionA0 : std::runtime_error {
    NoInjectionA0()
        : std::runtime_error(
              "A_0 has no vector-field realization: e_i o e_0 = e_i forces every image "
              "into the one-dimensional span of x d/dx, contradicting injectivity") {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

}  // namespace prelie

#endif
