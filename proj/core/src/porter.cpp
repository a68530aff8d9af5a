#include "docsearch/porter.hpp"

#include <array>
#include <cstddef>

namespace docsearch {
namespace {

bool is_cons(std::string_view w, std::size_t i) {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return false;
    case 'y':
      return i == 0 || !is_cons(w, i - 1);
    default:
      return true;
  }
}

// m in the [C](VC)^m[V] decomposition of the stem.
int measure(std::string_view stem) {
  int m = 0;
  std::size_t i = 0;
  const std::size_t n = stem.size();
  while (i < n && is_cons(stem, i)) ++i;
  for (;;) {
    while (i < n && !is_cons(stem, i)) ++i;
    if (i == n) return m;
    while (i < n && is_cons(stem, i)) ++i;
    ++m;
    if (i == n) return m;
  }
}

bool has_vowel(std::string_view stem) {
  for (std::size_t i = 0; i < stem.size(); ++i) {
    if (!is_cons(stem, i)) return true;
  }
  return false;
}

bool ends_double_cons(std::string_view w) {
  const std::size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_cons(w, n - 1);
}

// *o: stem ends cvc where the final c is not w, x or y.
bool ends_cvc(std::string_view w) {
  const std::size_t n = w.size();
  if (n < 3) return false;
  if (!is_cons(w, n - 3) || is_cons(w, n - 2) || !is_cons(w, n - 1)) {
    return false;
  }
  const char c = w[n - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
  int min_measure;  // -1: unconditional
};

bool ends_with(std::string_view w, std::string_view suf) {
  return w.size() >= suf.size() &&
         w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
}

// Applies the longest-matching rule in the set; if its measure condition
// fails the word is left unchanged (no other rule in the set is tried).
template <std::size_t N>
std::string apply_rules(std::string w, const std::array<Rule, N>& rules) {
  const Rule* best = nullptr;
  for (const Rule& r : rules) {
    if (ends_with(w, r.suffix) &&
        (best == nullptr || r.suffix.size() > best->suffix.size())) {
      best = &r;
    }
  }
  if (best == nullptr) return w;
  std::string_view stem(w.data(), w.size() - best->suffix.size());
  if (best->min_measure >= 0 && measure(stem) <= best->min_measure) return w;
  std::string out(stem);
  out.append(best->replacement);
  return out;
}

std::string step1a(std::string w) {
  static constexpr std::array<Rule, 4> rules{{
      {"sses", "ss", -1}, {"ies", "i", -1}, {"ss", "ss", -1}, {"s", "", -1}}};
  return apply_rules(std::move(w), rules);
}

std::string step1b(std::string w) {
  if (ends_with(w, "eed")) {
    std::string_view stem(w.data(), w.size() - 3);
    if (measure(stem) > 0) w.pop_back();
    return w;
  }
  bool applied = false;
  if (ends_with(w, "ed") && has_vowel({w.data(), w.size() - 2})) {
    w.resize(w.size() - 2);
    applied = true;
  } else if (ends_with(w, "ing") && has_vowel({w.data(), w.size() - 3})) {
    w.resize(w.size() - 3);
    applied = true;
  }
  if (applied) {
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
      w.push_back('e');
    } else if (ends_double_cons(w) && w.back() != 'l' && w.back() != 's' &&
               w.back() != 'z') {
      w.pop_back();
    } else if (measure(w) == 1 && ends_cvc(w)) {
      w.push_back('e');
    }
  }
  return w;
}

std::string step1c(std::string w) {
  if (ends_with(w, "y") && has_vowel({w.data(), w.size() - 1})) {
    w.back() = 'i';
  }
  return w;
}

std::string step2(std::string w) {
  static constexpr std::array<Rule, 20> rules{{
      {"ational", "ate", 0}, {"tional", "tion", 0}, {"enci", "ence", 0},
      {"anci", "ance", 0},   {"izer", "ize", 0},    {"abli", "able", 0},
      {"alli", "al", 0},     {"entli", "ent", 0},   {"eli", "e", 0},
      {"ousli", "ous", 0},   {"ization", "ize", 0}, {"ation", "ate", 0},
      {"ator", "ate", 0},    {"alism", "al", 0},    {"iveness", "ive", 0},
      {"fulness", "ful", 0}, {"ousness", "ous", 0}, {"aliti", "al", 0},
      {"iviti", "ive", 0},   {"biliti", "ble", 0}}};
  return apply_rules(std::move(w), rules);
}

std::string step3(std::string w) {
  static constexpr std::array<Rule, 7> rules{{
      {"icate", "ic", 0}, {"ative", "", 0}, {"alize", "al", 0},
      {"iciti", "ic", 0}, {"ical", "ic", 0}, {"ful", "", 0},
      {"ness", "", 0}}};
  return apply_rules(std::move(w), rules);
}

std::string step4(std::string w) {
  static constexpr std::array<Rule, 19> rules{{
      {"al", "", 1},    {"ance", "", 1}, {"ence", "", 1}, {"er", "", 1},
      {"ic", "", 1},    {"able", "", 1}, {"ible", "", 1}, {"ant", "", 1},
      {"ement", "", 1}, {"ment", "", 1}, {"ent", "", 1},  {"ion", "", 1},
      {"ou", "", 1},    {"ism", "", 1},  {"ate", "", 1},  {"iti", "", 1},
      {"ous", "", 1},   {"ive", "", 1},  {"ize", "", 1}}};
  // ION additionally requires the stem to end in s or t. No other suffix in
  // the set can match a word ending in "ion", so the test stands alone.
  if (ends_with(w, "ion")) {
    std::string_view stem(w.data(), w.size() - 3);
    if (stem.empty() || (stem.back() != 's' && stem.back() != 't')) return w;
  }
  return apply_rules(std::move(w), rules);
}

std::string step5a(std::string w) {
  if (ends_with(w, "e")) {
    std::string_view stem(w.data(), w.size() - 1);
    const int m = measure(stem);
    if (m > 1 || (m == 1 && !ends_cvc(stem))) w.pop_back();
  }
  return w;
}

std::string step5b(std::string w) {
  if (measure(w) > 1 && ends_double_cons(w) && w.back() == 'l') {
    w.pop_back();
  }
  return w;
}

}  // namespace

std::string porter_stem(std::string_view word) {
  std::string w(word);
  if (w.size() <= 2) return w;
  w = step1a(std::move(w));
  w = step1b(std::move(w));
  w = step1c(std::move(w));
  w = step2(std::move(w));
  w = step3(std::move(w));
  w = step4(std::move(w));
  w = step5a(std::move(w));
  w = step5b(std::move(w));
  return w;
}

}  // namespace docsearch
