#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace recipalg {

// Base class for domain errors raised on bad input data. Contract violations
// (wrong dimensions, out-of-range indices) throw std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroFormError : public Error {
public:
    explicit ZeroFormError(int index)
        : Error("form " + std::to_string(index + 1) + " is the zero form"), index(index) {}
    int index;
};

class ProportionalFormsError : public Error {
public:
    ProportionalFormsError(int first, int second)
        : Error("forms " + std::to_string(first + 1) + " and " + std::to_string(second + 1) +
                " are proportional"),
          first(first), second(second) {}
    int first;
    int second;
};

class NotGenericError : public Error {
public:
    NotGenericError(long long n, long long dim)
        : Error("generic arrangement needs n >= dim, got n=" + std::to_string(n) +
                ", dim=" + std::to_string(dim)) {}
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line(line) {}
    int line;
};

// Raised by the brute-force rank computations when the estimated matrix size
// exceeds the configured entry budget.
class TooLargeError : public Error {
public:
    explicit TooLargeError(unsigned long long estimatedEntries)
        : Error("estimated matrix size " + std::to_string(estimatedEntries) +
                " entries exceeds the configured budget"),
          estimatedEntries(estimatedEntries) {}
    unsigned long long estimatedEntries;
};

// Raised when the residue-decomposition linear system is singular, which would
// indicate an invalid complement realization.
class AmbiguousDecompositionError : public Error {
public:
    explicit AmbiguousDecompositionError(std::size_t nullspaceDim)
        : Error("decomposition system has nullspace of dimension " +
                std::to_string(nullspaceDim)),
          nullspaceDim(nullspaceDim) {}
    std::size_t nullspaceDim;
};

} // namespace recipalg
