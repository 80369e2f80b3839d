#ifndef FLAGTOP_TYPES_HPP
#define FLAGTOP_TYPES_HPP

#include <stdexcept>
#include <string>

namespace flagtop {

// Thrown on bad user-supplied arguments (inadmissible rank, index out of
// range, duplicate eigenvalues, ...).  CLI maps this to exit code 2.
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Thrown when an internal exact-arithmetic invariant breaks (non-integral
// pairing, dominance scan finding zero or two candidates, ...).  These are
// bugs, not user errors.
class consistency_error : public std::logic_error {
public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

// Thrown when a floating-point certification fails (chart mismatch,
// undersampled winding, non-integer accumulated phase).  CLI exit code 3.
class numeric_error : public std::runtime_error {
public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an exact integer matrix identity fails.  CLI exit code 4.
class identity_error : public std::runtime_error {
public:
  explicit identity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace flagtop

#endif
