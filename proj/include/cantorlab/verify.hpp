#ifndef CANTORLAB_VERIFY_HPP
#define CANTORLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cantorlab {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;  // set on failure
};

/// Runs the full acceptance suite; the seed fully determines every sampled
/// input.  All checks are exact.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

}  // namespace cantorlab

#endif
