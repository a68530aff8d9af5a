#include "docsearch/analyzer.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "docsearch/errors.hpp"
#include "docsearch/porter.hpp"
#include "docsearch/utf8.hpp"

namespace docsearch {
namespace {

// Token characters: ASCII alphanumerics, plus non-ASCII codepoints that are
// not common typographic punctuation or whitespace. Without a full Unicode
// category table this keeps accented words intact while still splitting on
// NBSP, dashes, curly quotes and CJK punctuation.
bool is_token_char(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
           (cp >= 'A' && cp <= 'Z');
  }
  if (cp == 0xA0 || cp == 0xAB || cp == 0xBB || cp == 0xB7) return false;
  if (cp >= 0x2000 && cp <= 0x206F) return false;  // general punctuation
  if (cp >= 0x2E00 && cp <= 0x2E7F) return false;  // supplemental punct
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  if (cp >= 0xFE30 && cp <= 0xFE4F) return false;
  if (cp >= 0xFF01 && cp <= 0xFF0F) return false;  // fullwidth punct
  if (cp >= 0xFF1A && cp <= 0xFF20) return false;
  if (cp >= 0xFF3B && cp <= 0xFF40) return false;
  if (cp >= 0xFF5B && cp <= 0xFF65) return false;
  if (cp == utf8::kReplacement) return false;
  return true;
}

void ascii_lower(std::string& s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
}

bool all_ascii_alpha(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= 'a' && c <= 'z';
  });
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t position = 0;
  while (i < text.size()) {
    std::size_t probe = i;
    if (!is_token_char(utf8::decode(text, probe))) {
      i = probe;
      continue;
    }
    const std::size_t start = i;
    std::size_t end = i;
    while (end < text.size()) {
      std::size_t next = end;
      if (!is_token_char(utf8::decode(text, next))) break;
      end = next;
    }
    std::string term(text.substr(start, end - start));
    ascii_lower(term);
    out.push_back(Token{std::move(term), position++, start});
    i = end;
  }
  return out;
}

std::vector<Token> analyze(std::string_view text,
                           const AnalyzerConfig& config) {
  std::vector<Token> out;
  for (Token& tok : tokenize(text)) {
    if (utf8::length(tok.text) < config.min_token_length) continue;
    if (config.stopwords.contains(tok.text)) continue;
    if (config.stemming_enabled && all_ascii_alpha(tok.text)) {
      tok.text = porter_stem(tok.text);
    }
    out.push_back(std::move(tok));
  }
  return out;
}

std::vector<std::string> analyze_terms(std::string_view text,
                                       const AnalyzerConfig& config) {
  std::vector<std::string> terms;
  for (Token& tok : analyze(text, config)) {
    terms.push_back(std::move(tok.text));
  }
  return terms;
}

const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> kDefault = {
      "a",    "an",   "and",  "are",   "as",    "at",    "be",   "but",
      "by",   "for",  "if",   "in",    "into",  "is",    "it",   "no",
      "not",  "of",   "on",   "or",    "such",  "that",  "the",  "their",
      "then", "there", "these", "they", "this",  "to",    "was",  "will",
      "with"};
  return kDefault;
}

AnalyzerConfig AnalyzerConfig::defaults() {
  AnalyzerConfig cfg;
  cfg.stopwords = default_stopwords();
  return cfg;
}

std::set<std::string> load_stopwords(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw Error(ErrorCode::io,
                "cannot open stopword file: " + file.string());
  }
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t");
    std::string word = line.substr(first, last - first + 1);
    if (word.empty() || word.front() == '#') continue;
    ascii_lower(word);
    words.insert(std::move(word));
  }
  return words;
}

}  // namespace docsearch
