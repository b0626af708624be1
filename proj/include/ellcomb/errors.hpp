// SPDX-License-Identifier: Apache-2.0
#ifndef ELLCOMB_ERRORS_HPP
#define ELLCOMB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ellcomb {

// Exact division requested but no quotient exists in the integer ring.
class NotDivisibleError : public std::domain_error {
  public:
    explicit NotDivisibleError(const std::string& what) : std::domain_error(what) {}
};

class DivisionByZeroError : public std::domain_error {
  public:
    explicit DivisionByZeroError(const std::string& what) : std::domain_error(what) {}
};

// Malformed polynomial text; position() is the byte offset of the offending token.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

// Enumeration guard tripped; the request would exceed the supported desk-scale range.
class SizeLimitError : public std::length_error {
  public:
    explicit SizeLimitError(const std::string& what) : std::length_error(what) {}
};

class NotATreeError : public std::domain_error {
  public:
    explicit NotATreeError(const std::string& what) : std::domain_error(what) {}
};

class FieldMismatchError : public std::invalid_argument {
  public:
    explicit FieldMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

class IndexError : public std::out_of_range {
  public:
    explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace ellcomb

#endif
