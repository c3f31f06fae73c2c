#pragma once

#include <stdexcept>
#include <string>

namespace teachkit {

/// Malformed input: bad file syntax, out-of-range values, unknown names.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (enumeration cap, attempt limit) was hit.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace teachkit

namespace teachkit {

/// No example set within the search space makes the target identifiable.
class NoWitness : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace teachkit
