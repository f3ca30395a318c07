#ifndef ELLIPTOPE_SUITE_HPP
#define ELLIPTOPE_SUITE_HPP

#include <string>
#include <vector>

namespace ell {

struct SuiteCase {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;
  bool all_pass = false;
};

// Named invariant batteries over the built-in corpus. Valid names:
// phi-properties, certificates, counterexamples, recognizers.
SuiteReport run_suite(const std::string& name, const std::string& corpus_dir);

}  // namespace ell

#endif
