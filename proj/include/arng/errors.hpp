#pragma once

#include <stdexcept>
#include <string>

namespace arng {

/// Invalid user-supplied data (malformed literals, violated invariants of inputs).
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The request is valid but outside the supported range of this pipeline
/// (e.g. quotient evaluation at n < 2k, which is served by the oracle instead).
struct unsupported_range : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (vertex budget) would be exceeded.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed; indicates a bug, not bad input.
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace arng
