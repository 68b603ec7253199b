#pragma once
/// @file error.hpp
/// @brief Error type for violated construction invariants.

#include <stdexcept>
#include <string>

namespace stci {

/// Raised when the recursive construction reaches a state its invariants
/// forbid (a failed decomposition, a malformed table, a sign that is not a
/// unit, ...). The CLI maps this to its own exit code so callers can tell
/// "the procedure broke" apart from "a verification check failed".
class construction_error : public std::runtime_error {
public:
    explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stci
