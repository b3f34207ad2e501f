#ifndef CQF_ERRORS_HPP
#define CQF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cqf {

// Bad argument to a public operation (out-of-range k, size mismatch, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Something that cannot happen for correct input did happen (singular
// transition matrix, non-integral result from an integral source).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// File-system failures of the cache and report writers.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cqf

#endif
