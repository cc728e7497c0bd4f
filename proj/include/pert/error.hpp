#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pert {

// How a failure should surface at the process/service boundary.
enum class ErrorKind {
    Input,      // malformed or structurally invalid input
    Dimension,  // vector/term sizes disagree with the model
    Domain,     // well-formed query with no answer (on a wall, not realisable, ...)
    Limit,      // a configured enumeration/search budget was exceeded
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

} // namespace pert
