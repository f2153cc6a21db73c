#pragma once

#include <stdexcept>
#include <string>

namespace ctkit {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: file syntax, shape violations, non-canonical number
// strings, out-of-range indices.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A request the given data cannot answer: unknown class names, missing
// power maps, violated operation preconditions.
class DataError : public Error {
 public:
  using Error::Error;
};

// Mathematically inconsistent data: non-integral multiplication
// coefficients, failed counting identities, ambiguous inverse classes.
// Computations abort on these rather than continue on poisoned input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ctkit
