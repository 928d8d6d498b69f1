#pragma once

#include <stdexcept>
#include <string>

namespace qpos {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Series of different truncation orders were combined.
class OrderMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Constant term is not a unit in Z.
class NonInvertibleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A proven identity or invariant failed at runtime; always an implementation bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qpos
