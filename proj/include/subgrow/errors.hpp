#pragma once

#include <stdexcept>
#include <string>

namespace subgrow {

// Base class for everything this library throws.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad arguments from the caller: arity mismatches, invalid generator
// indices, unusable function kinds, unknown catalog names.
class input_error : public error {
public:
  using error::error;
};

// A relator has nonzero image under a would-be quotient map.
class invalid_quotient_error : public input_error {
public:
  using input_error::input_error;
};

// A supplied witness (free-quotient epimorphism, fibering automorphism)
// failed its validity check.
class witness_error : public error {
public:
  using error::error;
};

// A configured cap (index, image-group size, bit size, scan length) was
// exceeded. The message reports the cap.
class resource_error : public error {
public:
  using error::error;
};

// Syntax error in the textual presentation format.
class parse_error : public error {
public:
  parse_error(const std::string& msg, int line)
      : error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// An internal consistency check failed; signals a bug, not bad input.
class internal_error : public error {
public:
  using error::error;
};

}  // namespace subgrow
