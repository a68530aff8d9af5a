#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace docsearch {

// One normalized term produced by analysis. `position` is the token's
// ordinal in the source text before any filtering, so stopword removal
// leaves gaps instead of renumbering. `char_offset` is the byte offset of
// the token's surface form in the source.
struct Token {
  std::string text;
  std::size_t position = 0;
  std::size_t char_offset = 0;

  bool operator==(const Token&) const = default;
};

struct AnalyzerConfig {
  std::set<std::string> stopwords;
  bool stemming_enabled = true;
  std::size_t min_token_length = 1;

  // Default English stopword list, stemming on.
  static AnalyzerConfig defaults();
};

// Splits on any non-alphanumeric boundary and lowercases (ASCII). Digits are
// kept; "38.331" becomes two adjacent tokens "38","331". Total function.
std::vector<Token> tokenize(std::string_view text);

// tokenize -> lowercase -> stopword removal -> stemming (when enabled).
// Surviving tokens keep their original positions and offsets.
std::vector<Token> analyze(std::string_view text, const AnalyzerConfig& config);

// Convenience: just the term strings of analyze(), in order.
std::vector<std::string> analyze_terms(std::string_view text,
                                       const AnalyzerConfig& config);

// The list shipped in share/stopwords/english.txt, compiled in as the
// default so no data file is needed at runtime.
const std::set<std::string>& default_stopwords();

// One term per line, UTF-8, '#' lines ignored. Terms are lowercased so the
// set is closed under the analyzer's own lowercasing.
std::set<std::string> load_stopwords(const std::filesystem::path& file);

}  // namespace docsearch
