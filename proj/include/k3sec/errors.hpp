#pragma once

#include <stdexcept>
#include <string>

namespace k3sec {

// A partition does not fit the (ell+1) x (n-ell) box of its Grassmannian.
struct InadmissiblePartition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A class was assembled from terms of unequal weight.
struct MixedCodimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Two classes from different Grassmannians were combined.
struct ContextMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Codimensions do not sum to the dimension of the Grassmannian.
struct CodimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// d + h.K is odd, so the hyperplane-section genus is not an integer.
struct ParityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of the operation (e.g. t < 2).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A pipeline was invoked below its very-ampleness gate; the message names
// the required bound.
struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace k3sec
