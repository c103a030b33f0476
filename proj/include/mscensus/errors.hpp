#pragma once

#include <stdexcept>
#include <string>

namespace mscensus {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller passed something malformed (mismatched posets, partial tables...).
class argument_error : public error {
public:
    using error::error;
};

// Requested size exceeds what the bit-set representation supports.
class size_limit_error : public argument_error {
public:
    using argument_error::argument_error;
};

// Input data (relations, operator tables, documents) failed validation.
class validation_error : public error {
public:
    using error::error;
};

// Operation needs structure the poset does not have (meets, complements...).
class unsupported_structure_error : public error {
public:
    using error::error;
};

// Operation called outside its documented precondition.
class precondition_error : public error {
public:
    using error::error;
};

// Search exceeded its time or node budget.
class resource_error : public error {
public:
    using error::error;
};

// A result that theory guarantees failed to materialize. Always a bug.
class internal_consistency_error : public error {
public:
    using error::error;
};

} // namespace mscensus
