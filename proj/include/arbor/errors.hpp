#pragma once

#include <stdexcept>
#include <string>

namespace arbor {

/** Operands from different ring instantiations (rational vs polynomial,
    or polynomials in a different number of variables). */
struct ring_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Malformed textual input; message carries position and reason. */
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Precondition violation on a domain operation. */
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Computation would exceed the configured degree safety cap. */
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace arbor
