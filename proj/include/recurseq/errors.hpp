#pragma once

#include <stdexcept>
#include <string>

namespace recurseq {

// Invalid argument for the mathematical operation (zero polynomial where a
// nonzero one is required, c >= b, a non-prime modulus, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A modular scan ran past its configured state cap.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A theorem hypothesis required by the operation does not hold for the input.
class PreconditionViolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace recurseq
