#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace primetree {

enum class ErrorKind {
    SiblingCollision,
    MisplacedInverse,
    InverseLabelPresent,
    ZeroInput,
    NotPrime,
    SizeOverBudget,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Domain error raised by every module. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    // Message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace primetree
