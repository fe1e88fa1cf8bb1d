#ifndef SWLINK_ERRORS_HPP
#define SWLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace swlink {

// Base of all toolkit errors. ParseError: malformed textual input (braid
// grammar, JSON payloads). DomainError: precondition or algebraic failure
// on well-formed input. The CLI maps these to exit codes 2 and 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

#define SWLINK_DEFINE_ERROR(NAME, BASE)                                      \
    class NAME : public BASE {                                               \
    public:                                                                  \
        explicit NAME(const std::string& what) : BASE(#NAME ": " + what) {}  \
    }

SWLINK_DEFINE_ERROR(MalformedInput, ParseError);
SWLINK_DEFINE_ERROR(LetterOutOfRange, ParseError);

SWLINK_DEFINE_ERROR(VariableMismatch, DomainError);
SWLINK_DEFINE_ERROR(UnmappedGenerator, DomainError);
SWLINK_DEFINE_ERROR(UnmappedVariable, DomainError);
SWLINK_DEFINE_ERROR(NonSquare, DomainError);
SWLINK_DEFINE_ERROR(NotDivisible, DomainError);
SWLINK_DEFINE_ERROR(DegenerateMatrix, DomainError);
SWLINK_DEFINE_ERROR(AsymmetricSupport, DomainError);
SWLINK_DEFINE_ERROR(UnknownClass, DomainError);
SWLINK_DEFINE_ERROR(ArityMismatch, DomainError);
SWLINK_DEFINE_ERROR(StrandMismatch, DomainError);

#undef SWLINK_DEFINE_ERROR

} // namespace swlink

#endif
