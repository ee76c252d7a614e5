#pragma once

#include <stdexcept>

namespace ringauto {

/// Base class for all domain errors raised by this library.
struct RingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAUnit : RingError { using RingError::RingError; };
struct ModulusMismatch : RingError { using RingError::RingError; };
struct BadInput : RingError { using RingError::RingError; };
struct BadDivisor : RingError { using RingError::RingError; };
struct ZeroInput : RingError { using RingError::RingError; };
struct NotInvertible : RingError { using RingError::RingError; };
struct OrderExceedsCap : RingError { using RingError::RingError; };
struct SearchSpaceTooLarge : RingError { using RingError::RingError; };
struct RingIsReduced : RingError { using RingError::RingError; };
struct BadFactorization : RingError { using RingError::RingError; };
struct BoundMismatch : RingError { using RingError::RingError; };
struct NotZ4 : RingError { using RingError::RingError; };
struct NotAGroup : RingError { using RingError::RingError; };

// Raised when a built-in cross-check fails; any occurrence is a bug.
struct InternalCheckFailed : RingError { using RingError::RingError; };
struct InconsistentWithCatalog : RingError { using RingError::RingError; };

} // namespace ringauto
