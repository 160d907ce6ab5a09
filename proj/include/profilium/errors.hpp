#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace profilium {

/// A caller broke an operation's precondition (shape mismatch, wrong ring, bad parameter).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed ring spec or module literal. Carries the offending token and its offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::string token, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position) +
                             " (token '" + token + "')"),
          token_(std::move(token)),
          position_(position) {}

    const std::string& token() const noexcept { return token_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string token_;
    std::size_t position_;
};

/// Injective envelopes requested in a family where they are not finitely generated.
class UnsupportedEnvelope : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug, never a result.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace profilium
