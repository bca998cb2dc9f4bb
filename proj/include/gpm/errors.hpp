#pragma once

#include <stdexcept>
#include <string>

namespace gpm {

// Base for all toolkit errors.  The CLI maps these to exit code 2.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured cap was exceeded (closure size, table size, enumeration budget).
struct scale_error : error {
  using error::error;
};

// Input data failed a structural check (bad Cayley table, bad character table).
struct validation_error : error {
  using error::error;
};

// The operation is not supported for these inputs (e.g. a theorem hypothesis
// fails, or a nonabelian group is passed where an abelian one is required).
struct capability_error : error {
  using error::error;
};

// Arguments outside the operation's domain (e.g. contracting the full ground set).
struct domain_error : error {
  using error::error;
};

// An internal invariant failed; indicates corrupt input data or a bug.
struct consistency_error : error {
  using error::error;
};

}  // namespace gpm
