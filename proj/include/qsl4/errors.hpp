#ifndef QSL4_ERRORS_HPP
#define QSL4_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsl4 {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos = std::string::npos)
        : std::runtime_error(msg), position(pos) {}
    size_t position;
};

struct DegreeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedCase : std::runtime_error {  // C2 == 0
    using std::runtime_error::runtime_error;
};

struct InternalInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstraintViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSplitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoPerturbationEntry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qsl4

#endif
