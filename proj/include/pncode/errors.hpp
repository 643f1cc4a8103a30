#pragma once

#include <stdexcept>
#include <string>

namespace pncode {

// Requested computation exceeds a configured size or budget ceiling.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computation routes disagreed. This is a bug in the
// arithmetic, never a property of the input.
struct consistency_error : std::logic_error {
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pncode
