#ifndef SEMICODE_ERRORS_HPP
#define SEMICODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semicode {

struct EmptyGenerators : std::invalid_argument {
    EmptyGenerators() : std::invalid_argument("generator set is empty") {}
};

struct NonCoprimeGenerators : std::invalid_argument {
    explicit NonCoprimeGenerators(long long g)
        : std::invalid_argument("generators have gcd " + std::to_string(g) +
                                ", the complement in N0 would be infinite") {}
};

struct NotAMember : std::domain_error {
    explicit NotAMember(long long l)
        : std::domain_error(std::to_string(l) + " is not a semigroup element") {}
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by the zero field element") {}
};

struct SpecMismatch : std::invalid_argument {
    SpecMismatch() : std::invalid_argument("operands belong to different field specs") {}
};

struct UnsupportedQ : std::invalid_argument {
    explicit UnsupportedQ(long long q)
        : std::invalid_argument("q = " + std::to_string(q) +
                                " is not supported (expected 2, 3, 4 or 5)") {}
};

struct DesignOutOfRange : std::invalid_argument {
    explicit DesignOutOfRange(const std::string& what) : std::invalid_argument(what) {}
};

struct TooLargeForExhaustive : std::domain_error {
    explicit TooLargeForExhaustive(const std::string& what) : std::domain_error(what) {}
};

}  // namespace semicode

#endif
