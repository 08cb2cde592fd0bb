#pragma once

#include <stdexcept>
#include <string>

namespace qre {

// Thrown on violated preconditions and malformed input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qre
