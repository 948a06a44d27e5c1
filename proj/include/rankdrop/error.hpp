#pragma once

#include <stdexcept>
#include <string>

namespace rankdrop {

/// Machine-readable failure kinds. Every throwing operation in the library
/// reports one of these; the CLI maps them onto exit codes and JSON fields.
enum class ErrorKind {
    ParseError,
    NonSquare,
    DimensionMismatch,
    NotUnique,
    DegenerateConic,
    PointNotOnConic,
    DegenerateInput,
    SideNotCollinear,
    NotGeneralPosition,
    HomographyRelated,
    NoCommonPoint,
    CenterNotOnConic,
    NotDeficient,
    NoRationalCenter,
    RankNotTwo,
    NotOnSurface,
};

/// Stable string form of an ErrorKind (used verbatim in CLI output).
const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace rankdrop
