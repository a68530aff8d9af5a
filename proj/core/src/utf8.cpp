#include "docsearch/utf8.hpp"

namespace docsearch::utf8 {

bool is_continuation(unsigned char byte) { return (byte & 0xC0) == 0x80; }

char32_t decode(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int extra;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    ++i;
    return kReplacement;
  }
  if (i + 1 + static_cast<std::size_t>(extra) > s.size()) {
    ++i;
    return kReplacement;
  }
  char32_t out = cp;
  for (int k = 1; k <= extra; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if (!is_continuation(b)) {
      ++i;
      return kReplacement;
    }
    out = (out << 6) | (b & 0x3F);
  }
  // Reject overlong encodings and surrogates rather than letting them
  // alias other codepoints.
  static constexpr char32_t kMin[4] = {0, 0x80, 0x800, 0x10000};
  if (out < kMin[extra] || (out >= 0xD800 && out <= 0xDFFF) ||
      out > 0x10FFFF) {
    ++i;
    return kReplacement;
  }
  i += static_cast<std::size_t>(extra) + 1;
  return out;
}

std::size_t length(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size();) {
    decode(s, i);
    ++n;
  }
  return n;
}

std::size_t byte_offset(std::string_view s, std::size_t scalar_index) {
  std::size_t i = 0;
  for (std::size_t n = 0; n < scalar_index && i < s.size(); ++n) {
    decode(s, i);
  }
  return i;
}

std::string_view substr_scalars(std::string_view s, std::size_t scalar_start,
                                std::size_t scalar_count) {
  const std::size_t begin = byte_offset(s, scalar_start);
  std::size_t i = begin;
  for (std::size_t n = 0; n < scalar_count && i < s.size(); ++n) {
    decode(s, i);
  }
  return s.substr(begin, i - begin);
}

}  // namespace docsearch::utf8
