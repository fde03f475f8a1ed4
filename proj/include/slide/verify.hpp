#ifndef SLIDE_VERIFY_HPP
#define SLIDE_VERIFY_HPP

#include <string>
#include <vector>

namespace slide {

struct Check {
  std::string id;
  bool pass;
  std::string detail;  // filled on failure
};

// Suites: counts, expansions, products, stability, oracles, profiles, maps, all.
std::vector<std::string> verify_suite_names();
std::vector<Check> run_verify_suite(const std::string& name);

}  // namespace slide

#endif
