#ifndef SPFLAG_VERIFY_HPP
#define SPFLAG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace spflag {

/// Options shared by the verification suites. All randomness is derived
/// from `seed`; output is a deterministic function of the options.
struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t budget = 200000;
  int workers = 1;
  int n = 0;  // 0 = suite default
  int d = 0;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> lines;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws ValidationError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

/// Runs every suite in registry order.
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt);

}  // namespace spflag

#endif
