#ifndef VSR_ERRORS_HPP
#define VSR_ERRORS_HPP

#include <stdexcept>

namespace vsr {

// File could not be opened, read, or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File was readable but does not parse as the expected format.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iteration produced NaN/Inf (typically a too-large time step).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace vsr

#endif  // VSR_ERRORS_HPP
