#pragma once

#include <stdexcept>
#include <string>

namespace semideg {

// Base for all structured errors. `code()` is the stable identifier used in
// JSON error reports and for exit-code mapping in the CLI.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// Cyclotomic order would exceed the configured cap.
struct CyclotomicOverflow : Error {
  explicit CyclotomicOverflow(const std::string& msg)
      : Error("CyclotomicOverflow", msg) {}
};

// A Newton step needs a root outside the supported cyclotomic-rational fields.
struct RootFieldUnsupported : Error {
  explicit RootFieldUnsupported(const std::string& msg)
      : Error("RootFieldUnsupported", msg) {}
};

// Some key form of the surface is not a polynomial.
struct NotInSpol : Error {
  explicit NotInSpol(const std::string& msg) : Error("NotInSpol", msg) {}
};

// A user-supplied curvette family fails its defining conditions.
struct InvalidFamily : Error {
  explicit InvalidFamily(const std::string& msg) : Error("InvalidFamily", msg) {}
};

// Recession-cone check failed: section spaces are infinite-dimensional.
struct UnboundedSections : Error {
  explicit UnboundedSections(const std::string& msg)
      : Error("UnboundedSections", msg) {}
};

// Surfaces compared are not built from equisingular branches.
struct NotEquisingular : Error {
  explicit NotEquisingular(const std::string& msg)
      : Error("NotEquisingular", msg) {}
};

// A fraction in an input file is not in lowest terms.
struct UnreducedFraction : Error {
  explicit UnreducedFraction(const std::string& msg)
      : Error("UnreducedFraction", msg) {}
};

// Both "semidegrees" and "branch" present (or neither).
struct ExclusiveFields : Error {
  explicit ExclusiveFields(const std::string& msg)
      : Error("ExclusiveFields", msg) {}
};

// Schema violation / unknown field / malformed value in an input.
struct SchemaError : Error {
  explicit SchemaError(const std::string& msg) : Error("SchemaError", msg) {}
};

// Domain-level precondition violation (bad semidegree, zero polynomial, ...).
struct InputError : Error {
  explicit InputError(const std::string& msg) : Error("InputError", msg) {}
};

// Internal invariant breached: always a bug, never a user error.
struct InternalInvariant : Error {
  explicit InternalInvariant(const std::string& msg)
      : Error("InternalInvariant", msg) {}
};

} // namespace semideg
