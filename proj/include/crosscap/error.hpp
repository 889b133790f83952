#ifndef CROSSCAP_ERROR_HPP
#define CROSSCAP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace crosscap {

enum class ErrorKind {
    MalformedCode,
    BadLabels,
    NonPlanar,
    Disconnected,
    ZeroPolynomial,
    VariableMismatch,
    TooLarge,
    NotAdequate,
    NotConnected,
    NotAlternating,
    SearchBudgetExceeded,
    BadTwistCount,
    NotAKnot,
    MixedSigns,
    NotPlanar,
    NotTrivalent,
    MissingFile,
    BadHeader,
    MissingKnots,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so
// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace crosscap

#endif  // CROSSCAP_ERROR_HPP
