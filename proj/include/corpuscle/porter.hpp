/*
 * Copyright 2026+ The corpuscle authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CORPUSCLE_PORTER_HPP
#define CORPUSCLE_PORTER_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace corpuscle {
namespace porter_detail {

// A letter is a consonant unless it is a, e, i, o, u, or a 'y' preceded by
// a consonant.
inline bool is_consonant(std::string_view w, std::size_t i) {
  switch (w[i]) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !is_consonant(w, i - 1);
    default:
      return true;
  }
}

// m in the [C](VC)^m[V] decomposition of a stem.
inline int measure(std::string_view stem) {
  const std::size_t n = stem.size();
  std::size_t i = 0;
  int m = 0;
  while (i < n && is_consonant(stem, i)) ++i;
  while (i < n) {
    while (i < n && !is_consonant(stem, i)) ++i;
    if (i == n) break;
    ++m;
    while (i < n && is_consonant(stem, i)) ++i;
  }
  return m;
}

inline bool has_vowel(std::string_view stem) {
  for (std::size_t i = 0; i < stem.size(); ++i)
    if (!is_consonant(stem, i)) return true;
  return false;
}

inline bool ends_double_consonant(std::string_view w) {
  const std::size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// Ends consonant-vowel-consonant where the final consonant is not w, x or y.
inline bool ends_cvc(std::string_view w) {
  const std::size_t n = w.size();
  if (n < 3) return false;
  if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) || !is_consonant(w, n - 1)) return false;
  const char last = w[n - 1];
  return last != 'w' && last != 'x' && last != 'y';
}

inline bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline std::string_view stem_before(const std::string& w, std::size_t suffix_len) {
  return std::string_view(w.data(), w.size() - suffix_len);
}

struct SuffixRule {
  std::string_view suffix;
  std::string_view replacement;
};

// Applies the first (longest) matching rule if the stem measure exceeds
// min_measure. A matched rule consumes the step whether or not the measure
// condition holds.
template <std::size_t N>
void apply_rule_step(std::string& w, const SuffixRule (&rules)[N], int min_measure) {
  for (const SuffixRule& rule : rules) {
    if (!ends_with(w, rule.suffix)) continue;
    if (measure(stem_before(w, rule.suffix.size())) > min_measure) {
      w.erase(w.size() - rule.suffix.size());
      w.append(rule.replacement);
    }
    return;
  }
}

// sses -> ss, ies -> i, ss -> ss, s -> (removed)
inline void step1a(std::string& w) {
  if (!ends_with(w, "s")) return;
  if (ends_with(w, "sses") || ends_with(w, "ies")) {
    w.erase(w.size() - 2);
  } else if (!ends_with(w, "ss")) {
    w.pop_back();
  }
}

inline void step1b(std::string& w) {
  if (ends_with(w, "eed")) {
    if (measure(stem_before(w, 3)) > 0) w.pop_back();
    return;
  }
  std::size_t cut = 0;
  if (ends_with(w, "ed") && has_vowel(stem_before(w, 2))) {
    cut = 2;
  } else if (ends_with(w, "ing") && has_vowel(stem_before(w, 3))) {
    cut = 3;
  }
  if (cut == 0) return;
  w.erase(w.size() - cut);
  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w.push_back('e');
  } else if (ends_double_consonant(w)) {
    const char last = w.back();
    if (last != 'l' && last != 's' && last != 'z') w.pop_back();
  } else if (measure(w) == 1 && ends_cvc(w)) {
    w.push_back('e');
  }
}

inline void step1c(std::string& w) {
  if (w.size() >= 2 && w.back() == 'y' && has_vowel(stem_before(w, 1))) w.back() = 'i';
}

inline void step2(std::string& w) {
  // Ordered longest-suffix-first so overlapping endings (ational/tional,
  // ization/ation) resolve to the longest match.
  static constexpr SuffixRule rules[] = {
      {"ization", "ize"}, {"ational", "ate"}, {"iveness", "ive"}, {"fulness", "ful"},
      {"ousness", "ous"}, {"biliti", "ble"},  {"tional", "tion"}, {"ousli", "ous"},
      {"entli", "ent"},   {"ation", "ate"},   {"alism", "al"},    {"aliti", "al"},
      {"iviti", "ive"},   {"enci", "ence"},   {"anci", "ance"},   {"izer", "ize"},
      {"alli", "al"},     {"logi", "log"},    {"ator", "ate"},    {"bli", "ble"},
      {"eli", "e"},
  };
  apply_rule_step(w, rules, 0);
}

inline void step3(std::string& w) {
  static constexpr SuffixRule rules[] = {
      {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
      {"ical", "ic"},  {"ness", ""},  {"ful", ""},
  };
  apply_rule_step(w, rules, 0);
}

inline void step4(std::string& w) {
  static constexpr SuffixRule rules[] = {
      {"ement", ""}, {"ance", ""}, {"ence", ""}, {"able", ""}, {"ible", ""},
      {"ment", ""},  {"ant", ""},  {"ent", ""},  {"ism", ""},  {"ate", ""},
      {"iti", ""},   {"ous", ""},  {"ive", ""},  {"ize", ""},  {"ion", ""},
      {"al", ""},    {"er", ""},   {"ic", ""},   {"ou", ""},
  };
  for (const SuffixRule& rule : rules) {
    if (!ends_with(w, rule.suffix)) continue;
    std::string_view stem = stem_before(w, rule.suffix.size());
    bool ok = measure(stem) > 1;
    if (ok && rule.suffix == "ion") {
      ok = !stem.empty() && (stem.back() == 's' || stem.back() == 't');
    }
    if (ok) w.erase(w.size() - rule.suffix.size());
    return;
  }
}

inline void step5a(std::string& w) {
  if (w.empty() || w.back() != 'e') return;
  std::string_view stem = stem_before(w, 1);
  const int m = measure(stem);
  if (m > 1 || (m == 1 && !ends_cvc(stem))) w.pop_back();
}

inline void step5b(std::string& w) {
  if (!w.empty() && w.back() == 'l' && ends_double_consonant(w) && measure(w) > 1) w.pop_back();
}

}  // namespace porter_detail

/// Porter suffix-stripping stem of a lowercase ASCII word. Words of length
/// one or two, and words containing anything other than a-z, are returned
/// unchanged.
inline std::string porter_stem(std::string word) {
  if (word.size() <= 2) return word;
  for (char c : word)
    if (c < 'a' || c > 'z') return word;
  using namespace porter_detail;
  step1a(word);
  step1b(word);
  step1c(word);
  step2(word);
  step3(word);
  step4(word);
  step5a(word);
  step5b(word);
  return word;
}

}  // namespace corpuscle

#endif  // CORPUSCLE_PORTER_HPP
