#pragma once

#include <stdexcept>
#include <string>

namespace lfam {

// Precondition on a mathematical input failed (composite modulus, n = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request outside a precomputed or representable range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class EmptyFamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lfam
