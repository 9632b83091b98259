#include "primetree/error.hpp"

namespace primetree {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::SiblingCollision: return "SiblingCollision";
        case ErrorKind::MisplacedInverse: return "MisplacedInverse";
        case ErrorKind::InverseLabelPresent: return "InverseLabelPresent";
        case ErrorKind::ZeroInput: return "ZeroInput";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::SizeOverBudget: return "SizeOverBudget";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace primetree
