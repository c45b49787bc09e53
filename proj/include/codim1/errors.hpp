#pragma once

#include <stdexcept>
#include <string>

namespace codim1 {

/// Base class for all toolkit errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in different rings.
struct ring_mismatch_error : error {
    using error::error;
};

/// Scalars from different coefficient fields were combined.
struct field_mismatch_error : error {
    using error::error;
};

/// An operation is not available over the requested coefficient field.
struct unsupported_field_error : error {
    using error::error;
};

/// Monomials of different arity were compared or multiplied.
struct arity_mismatch_error : error {
    using error::error;
};

/// A computation exceeded the configured step limit.  The result is
/// "too large", never a wrong answer.
struct resource_cap_error : error {
    using error::error;
};

/// An operation requires a user assertion (domain, factorial ambient, ...)
/// that was not given.
struct missing_assertion_error : error {
    using error::error;
};

/// A piece of evidence (witness, certificate) failed verification.
struct evidence_error : error {
    using error::error;
};

/// Verified evidence contradicts itself (e.g. lower bound above upper bound).
struct inconsistency_error : error {
    using error::error;
};

/// Malformed user input: parse errors, unresolved references, bad values.
struct input_error : error {
    using error::error;
};

} // namespace codim1
