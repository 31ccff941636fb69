#pragma once

#include <stdexcept>
#include <string>

namespace lzpath {

// Thrown when a closure computation exceeds its configured element cap.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an over-determined identity fails to close (conflicting
// derivations of the same table entry, transport conflicts, non-integer
// minima).  Indicates a bug or corrupt input, never a recoverable state.
class ConsistencyError : public std::logic_error {
public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lzpath
