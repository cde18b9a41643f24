#ifndef SDKIT_ERRORS_HPP
#define SDKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sdkit {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file; carries a line number when known.
struct ParseError : Error {
    int line = 0;
    ParseError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? msg + " (line " + std::to_string(line_no) + ")" : msg),
          line(line_no) {}
};

// Structurally well-formed input that fails a semantic check
// (non-symmetric Gram, rank-deficient generator matrix, ...).
struct ValidationError : Error {
    using Error::Error;
};

// An operation was called outside its contract (non-self-dual code
// where self-duality is required, even lattice passed to shadow, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Enumeration or search budget exceeded.
struct BudgetError : Error {
    using Error::Error;
};

} // namespace sdkit

#endif
