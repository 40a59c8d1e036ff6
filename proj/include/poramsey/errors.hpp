#pragma once

#include <stdexcept>
#include <string>

namespace poramsey {

/// A cross-object precondition failed: mismatched arity, dimension, frame or anchors.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string & what) : std::invalid_argument(what) {}
};

/// A feasibility ceiling would be exceeded. Raised instead of returning an unverified answer.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string & what) : std::runtime_error(what) {}
};

/// Input that cannot be read as the expected document (bad JSON, wrong field types).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string & what) : std::invalid_argument(what) {}
};

} // namespace poramsey
