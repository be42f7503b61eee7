#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ppw::tools {

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

// Canned runs behind `ppw reproduce <which>`.
std::vector<Check> reproduce(std::string_view which, unsigned threads);
const std::vector<std::string>& reproduce_targets();

}  // namespace ppw::tools
