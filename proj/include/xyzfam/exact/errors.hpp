#pragma once

#include <stdexcept>
#include <string>

namespace xyzfam {

/// Base of every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define XYZFAM_DEFINE_ERROR(Name)                          \
    class Name : public Error {                            \
    public:                                                \
        explicit Name(const std::string& what)             \
            : Error(std::string(#Name ": ") + what) {}     \
    };

XYZFAM_DEFINE_ERROR(DivisionByZero)
XYZFAM_DEFINE_ERROR(InexactDivision)
XYZFAM_DEFINE_ERROR(Undefined)
XYZFAM_DEFINE_ERROR(NotASquare)
XYZFAM_DEFINE_ERROR(NegativeInput)
XYZFAM_DEFINE_ERROR(PoleAtPoint)
XYZFAM_DEFINE_ERROR(ParseError)
XYZFAM_DEFINE_ERROR(ExponentOverflow)
XYZFAM_DEFINE_ERROR(SingularCurve)
XYZFAM_DEFINE_ERROR(SingularQuartic)
XYZFAM_DEFINE_ERROR(OffCurveInput)
XYZFAM_DEFINE_ERROR(ExceptionalPoint)
XYZFAM_DEFINE_ERROR(SymbolicDepthExceeded)
XYZFAM_DEFINE_ERROR(DegenerateDenominator)
XYZFAM_DEFINE_ERROR(MalformedRow)

#undef XYZFAM_DEFINE_ERROR

}  // namespace xyzfam
