#ifndef RGC_ERRORS_HPP
#define RGC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rgc {

// Syntax-level failure while reading one of the text formats.
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string & msg, int line_no) :
        std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no)
    {
    }
};

// Structural violation of the graph invariants.
struct InvalidGraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation applied to inputs outside its stated precondition.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph sum requires orable operands.
struct NotOrableError : PreconditionError {
    using PreconditionError::PreconditionError;
};

}

#endif
