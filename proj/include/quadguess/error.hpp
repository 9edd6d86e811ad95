#pragma once

#include <stdexcept>
#include <string>

namespace quadguess {

enum class ErrorKind {
    division_by_zero,
    invalid_argument,
    parse_error,
    degenerate_input,
    insufficient_terms,
    leading_coefficient_zero,
    inconsistent_initial_terms,
    nonlinear_step,
    unknown_oracle,
};

inline const char *to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::degenerate_input: return "degenerate-input";
    case ErrorKind::insufficient_terms: return "insufficient-terms";
    case ErrorKind::leading_coefficient_zero: return "leading-coefficient-zero";
    case ErrorKind::inconsistent_initial_terms: return "inconsistent-initial-terms";
    case ErrorKind::nonlinear_step: return "nonlinear-step";
    case ErrorKind::unknown_oracle: return "unknown-oracle";
    }
    return "unknown";
}

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace quadguess
