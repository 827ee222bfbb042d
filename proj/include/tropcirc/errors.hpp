#pragma once

#include <stdexcept>
#include <string>

namespace tropcirc {

// Thrown when an enumeration or expansion exceeds its configured cap.
// Callers map this to a distinct exit code; it is not a usage error.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tropcirc
