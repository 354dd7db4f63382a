#pragma once

#include <stdexcept>
#include <string>

namespace fanostab {

// Raised on malformed user-supplied data: dimension mismatches, non-unimodular
// transition matrices, undeclared incidence in blow-up specs, unknown preset
// ids, unparsable files. Internal invariant violations use assertions instead.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fanostab
