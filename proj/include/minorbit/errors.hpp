#pragma once

#include <stdexcept>
#include <string>

namespace minorbit {

// Malformed text input (partition strings, permutations, tableau files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A well-formed tableau that is not in the minimal promotion orbit O_n.
class NotInMinimalOrbit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The m < n construction was requested through a path that only supports m >= n.
class ExperimentalRequired : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Brute-force enumeration would exceed the configured cell or tableau cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace minorbit
