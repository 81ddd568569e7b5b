#ifndef ATC_ERRORS_HPP
#define ATC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace atc {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input that parsed fine but contains nothing to work with
// (empty transaction file, corpus with no usable documents, ...).
struct EmptyInputError : Error {
    using Error::Error;
};

// File could not be opened, read or written.
struct IoError : Error {
    using Error::Error;
};

// Malformed content in a file being parsed.
struct ParseError : Error {
    using Error::Error;
};

// Model file declares a format version this build does not understand.
struct VersionError : Error {
    using Error::Error;
};

// Content parsed but violates a structural invariant.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace atc

#endif
