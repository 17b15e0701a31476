#pragma once

#include <stdexcept>
#include <string>

namespace surfsym {

/// Malformed arguments: wrong lengths, disconnected graphs, bad parity.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every quantity is defined only for genus g > 1.
class InvalidGenus : public InvalidInput {
 public:
  explicit InvalidGenus(long long g)
      : InvalidInput("genus must exceed 1 (got " + std::to_string(g) + ")") {}
  explicit InvalidGenus(const std::string& what) : InvalidInput(what) {}
};

/// An optimisation had no feasible point where one was guaranteed.
class Infeasible : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A brute-force search exceeded its configured bound.
class SearchTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Group closure exceeded the element cap.
class GroupTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator failed to map a graph pair to itself.
class NotInvariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_genus(long long g) {
  if (g <= 1) throw InvalidGenus(g);
}

}  // namespace surfsym
