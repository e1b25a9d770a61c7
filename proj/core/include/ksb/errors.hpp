#pragma once

#include <stdexcept>
#include <string>

namespace ksb {

/// Arguments outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A configured resource cap (dimension, matrix size, search space) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-side precondition failed, e.g. a weight scheme whose support hits
/// an allowed distance, which would make the resulting bound unsound.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ksb
