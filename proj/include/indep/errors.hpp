#ifndef INDEP_ERRORS_HPP
#define INDEP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indep {

// Base class for every error this library throws on purpose. The CLI
// catches Error (and std::exception) and turns it into exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InversionOfZero : public Error {
public:
    InversionOfZero() : Error("inversion of zero (or effectively-zero) scalar") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero (or effectively-zero) scalar") {}
};

class NonFiniteValue : public Error {
public:
    explicit NonFiniteValue(const std::string& what_op)
        : Error("operation produced a non-finite value: " + what_op) {}
};

class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& detail)
        : Error("scalar does not belong to the active field: " + detail) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& detail)
        : Error("dimension mismatch: " + detail) {}
};

class EmptyPool : public Error {
public:
    EmptyPool() : Error("candidate pool must contain at least one point") {}
};

// Raised when a function handle cannot produce a value. Indices are
// 0-based positions of the function and point that failed, when known.
class EvaluationFailure : public Error {
public:
    EvaluationFailure(std::size_t function_index, std::size_t point_index,
                      const std::string& detail)
        : Error("evaluation failed for function " + std::to_string(function_index) +
                " at point " + std::to_string(point_index) + ": " + detail),
          function_index(function_index),
          point_index(point_index) {}
    std::size_t function_index;
    std::size_t point_index;
};

class PivotIsZero : public Error {
public:
    PivotIsZero() : Error("leading function vanishes at the proposed pivot point") {}
};

class CombinatorialBlowup : public Error {
public:
    explicit CombinatorialBlowup(const std::string& detail)
        : Error("tuple enumeration too large: " + detail) {}
};

class NotReduced : public Error {
public:
    explicit NotReduced(const std::string& side)
        : Error("kernel representation is not reduced: " + side +
                " factors are dependent over their pool") {}
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular (effectively-zero pivot)") {}
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name)
        : Error("unbound variable: " + name) {}
};

class TranscendentalInExactField : public Error {
public:
    explicit TranscendentalInExactField(const std::string& name)
        : Error("call '" + name + "' is only available over the approximate real field") {}
};

} // namespace indep

#endif // INDEP_ERRORS_HPP
