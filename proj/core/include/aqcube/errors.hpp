#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace aqcube {

// Bad user-supplied data: dimension mismatches, unresolved references,
// inputs outside the supported domain.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failure: a value that passed validation still
// broke an invariant (d∘d != 0, malformed complex, ...).
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a poset fails the gradedness check; carries two maximal
// chains between the same endpoints with different edge counts.
class NotGradedError : public InputError {
public:
    NotGradedError(std::string msg, std::vector<int> a, std::vector<int> b)
        : InputError(std::move(msg)), chain_a(std::move(a)), chain_b(std::move(b)) {}
    std::vector<int> chain_a;
    std::vector<int> chain_b;
};

// Malformed input document: bad syntax, wrong types, missing fields.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when no consistent sign assignment on interval cover extensions
// exists, so the coboundary cannot square to zero for this poset.
class NotSignableError : public InputError {
public:
    explicit NotSignableError(const std::string& msg) : InputError(msg) {}
};

}  // namespace aqcube
