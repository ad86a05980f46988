#pragma once

#include <stdexcept>

namespace kdknn {

/// Bad user input: malformed files, inconsistent dimensions, bad arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kdknn
