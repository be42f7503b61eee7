#pragma once

#include <string_view>
#include <vector>

namespace ppw::detail {

// Data files under core/data, compiled in. Names are relative paths such as
// "morphisms/sha3.txt". Throws std::out_of_range for an unknown name.
std::string_view embedded_file(std::string_view name);

// Names starting with `prefix`, sorted.
std::vector<std::string_view> embedded_names(std::string_view prefix);

}  // namespace ppw::detail
