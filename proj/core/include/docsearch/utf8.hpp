#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Minimal UTF-8 helpers. "Scalar" below means one decoded codepoint; invalid
// bytes decode as U+FFFD, one byte at a time, so every byte is consumed.
namespace docsearch::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

bool is_continuation(unsigned char byte);

// Decodes the codepoint starting at byte index `i` and advances `i` past it.
// Precondition: i < s.size().
char32_t decode(std::string_view s, std::size_t& i);

// Number of scalars in s.
std::size_t length(std::string_view s);

// Byte offset of the scalar with index `scalar_index` (clamped to s.size()).
std::size_t byte_offset(std::string_view s, std::size_t scalar_index);

// Substring covering `scalar_count` scalars starting at scalar `scalar_start`.
std::string_view substr_scalars(std::string_view s, std::size_t scalar_start,
                                std::size_t scalar_count);

}  // namespace docsearch::utf8
