#pragma once

#include <stdexcept>
#include <string>

namespace grr {

// Operands of a group-ring operation live over different groups.
class GroupMismatch : public std::invalid_argument {
 public:
  GroupMismatch() : std::invalid_argument("group-ring operands belong to different groups") {}
};

// Exact integer arithmetic left the range of the coefficient type.
class CoefficientOverflow : public std::overflow_error {
 public:
  explicit CoefficientOverflow(const std::string& what) : std::overflow_error(what) {}
};

class NotASchurRing : public std::runtime_error {
 public:
  explicit NotASchurRing(const std::string& what) : std::runtime_error(what) {}
};

class InvalidConnectingSet : public std::invalid_argument {
 public:
  explicit InvalidConnectingSet(const std::string& what) : std::invalid_argument(what) {}
};

// Fewer than three distinct reflections were supplied for a trivalent set.
class DegenerateConnectingSet : public std::invalid_argument {
 public:
  explicit DegenerateConnectingSet(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace grr
