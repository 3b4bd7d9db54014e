#pragma once

#include <stdexcept>
#include <string>

namespace indpoly {

// Malformed graph input: loops, duplicate edges, bad vertex indices.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input that does not follow a documented format.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact enumeration would exceed its configured size limit.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bound or query whose hypothesis does not hold for the given graph.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace indpoly
