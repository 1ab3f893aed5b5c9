#ifndef CANTORLAB_ERRORS_HPP
#define CANTORLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cantorlab {

// Bad arguments: out-of-range points, missing operands, schema violations.
class MalformedQueryError : public std::invalid_argument {
public:
  explicit MalformedQueryError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Size guards (depth limits, enumeration caps).
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// A runtime self-check failed; indicates malformed input tables.
class InternalConsistencyError : public std::runtime_error {
public:
  explicit InternalConsistencyError(const std::string& what)
      : std::runtime_error(what) {}
};

// A window admits no consistent prefix-exchange map; carries a witness key
// (serialized clopen) identifying the offending entry.
class InconsistencyError : public std::runtime_error {
public:
  InconsistencyError(const std::string& what, std::string witness_key)
      : std::runtime_error(what), witness(std::move(witness_key)) {}
  std::string witness;
};

}  // namespace cantorlab

#endif
