#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace scrollift {

// Domain failure with a stable machine-readable code ("NotPrimitive",
// "DegenerateLine", ...). The CLI prints the code and exits with status 1;
// tests match on it.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace scrollift
