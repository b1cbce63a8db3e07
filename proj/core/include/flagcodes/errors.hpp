#pragma once

#include <stdexcept>
#include <string>

namespace flagcodes {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimePower : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct AmbientMismatch : Error {
    using Error::Error;
};
struct SingularMatrix : Error {
    using Error::Error;
};
struct TypeMismatch : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct InvalidRange : Error {
    using Error::Error;
};
struct InexactDivision : Error {
    using Error::Error;
};
struct DenominatorZero : Error {
    using Error::Error;
};
struct InvalidDistance : Error {
    using Error::Error;
};
struct DistanceConditionViolated : Error {
    using Error::Error;
};
struct NotApplicable : Error {
    using Error::Error;
};
struct InvalidParams : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct InfeasibleSolution : Error {
    using Error::Error;
};

}  // namespace flagcodes
