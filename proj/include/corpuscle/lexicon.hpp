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

#ifndef CORPUSCLE_LEXICON_HPP
#define CORPUSCLE_LEXICON_HPP

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>

#include "corpuscle/errors.hpp"
#include "corpuscle/term_vector.hpp"

namespace corpuscle {

/// Stop words filtered out before counting. Immutable after load.
struct StopList {
  std::set<std::string> words;

  bool contains(const std::string& w) const { return words.count(w) != 0; }
  std::size_t size() const { return words.size(); }
};

/// The standard-English word list that defines the Standard/OOV split.
/// `name` is a provenance label echoed into reports.
struct Dictionary {
  std::unordered_set<std::string> words;
  std::string name;

  bool contains(const std::string& w) const { return words.count(w) != 0; }
  std::size_t size() const { return words.size(); }
};

enum class VocabClass { Standard, OOV };

namespace lexicon_detail {

inline std::string fold_ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

// Word-per-line file: blank lines and '#' comment lines skipped, entries
// lowercased and deduplicated. Entries with internal whitespace are ignored.
template <typename Set>
void load_wordfile(const std::filesystem::path& path, Set& out) {
  std::ifstream in(path);
  if (!in.is_open()) throw Error(Errc::FileMissing, path.string());
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    std::string_view entry(line.data() + start, line.size() - start);
    if (entry.front() == '#') continue;
    if (entry.find_first_of(" \t") != std::string_view::npos) continue;
    out.insert(fold_ascii_lower(entry));
  }
}

}  // namespace lexicon_detail

inline StopList load_stoplist(const std::filesystem::path& path) {
  StopList list;
  lexicon_detail::load_wordfile(path, list.words);
  if (list.words.empty())
    throw Error(Errc::EmptyList, "stop list has no entries: " + path.string());
  return list;
}

inline Dictionary load_dictionary(const std::filesystem::path& path, std::string name = "") {
  Dictionary dict;
  lexicon_detail::load_wordfile(path, dict.words);
  if (dict.words.empty())
    throw Error(Errc::EmptyList, "dictionary has no entries: " + path.string());
  dict.name = name.empty() ? path.stem().string() : std::move(name);
  return dict;
}

/// Standard iff the surface form is a dictionary word. Stems must not be
/// passed here; classification is defined on surfaces only.
inline VocabClass classify_vocab(const std::string& surface, const Dictionary& dict) {
  if (surface.empty()) throw Error(Errc::EmptyToken, "cannot classify an empty token");
  return dict.contains(surface) ? VocabClass::Standard : VocabClass::OOV;
}

/// Partition of a vector into (standard, oov); weights preserved.
inline std::pair<TermVector, TermVector> split_vector_by_vocab(const TermVector& v,
                                                               const Dictionary& dict) {
  TermVector standard{{}, v.mode};
  TermVector oov{{}, v.mode};
  for (const auto& [term, weight] : v.entries) {
    if (classify_vocab(term, dict) == VocabClass::Standard)
      standard.entries.emplace(term, weight);
    else
      oov.entries.emplace(term, weight);
  }
  return {std::move(standard), std::move(oov)};
}

}  // namespace corpuscle

#endif  // CORPUSCLE_LEXICON_HPP
