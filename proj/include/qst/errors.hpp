#pragma once

#include <stdexcept>
#include <string>

namespace qst {

// Error taxonomy for the exact-arithmetic kernel and the verification layers.
// Every throw site uses one of these so callers can distinguish contract
// violations (DomainError, RingMismatch) from computational dead ends
// (NotAUnit, NonInvertibleOrder) and from internal inconsistencies.

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& msg) : std::domain_error(msg) {}
};

struct RingMismatch : std::invalid_argument {
    explicit RingMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

struct NotAUnit : std::domain_error {
    explicit NotAUnit(const std::string& msg) : std::domain_error(msg) {}
};

struct TruncationTooShallow : std::invalid_argument {
    explicit TruncationTooShallow(const std::string& msg) : std::invalid_argument(msg) {}
};

// Thrown by the characteristic-p recursion when the q-degree is divisible by
// p, so the coefficient cannot be solved for by dividing by the degree.
struct NonInvertibleOrder : std::domain_error {
    int order;
    explicit NonInvertibleOrder(int k)
        : std::domain_error("recursion order " + std::to_string(k) +
                            " is not invertible in the coefficient field"),
          order(k) {}
};

struct InconsistentSystem : std::logic_error {
    explicit InconsistentSystem(const std::string& msg) : std::logic_error(msg) {}
};

struct NotFlat : std::invalid_argument {
    explicit NotFlat(const std::string& msg) : std::invalid_argument(msg) {}
};

struct DivisionNotExact : std::logic_error {
    explicit DivisionNotExact(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace qst
