#pragma once

#include <string>
#include <string_view>

namespace docsearch {

// Porter stemming algorithm (the original 1980 definition). Input must be
// lowercase ASCII letters; words of length <= 2 are returned unchanged, as
// in the reference implementation.
std::string porter_stem(std::string_view word);

}  // namespace docsearch
