#pragma once

#include <stdexcept>

namespace eigenrec {

// Every recoverable failure in the library throws this; the CLI maps it
// to stderr plus a nonzero exit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace eigenrec
