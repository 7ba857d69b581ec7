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

#ifndef CORPUSCLE_INDEX_HPP
#define CORPUSCLE_INDEX_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corpuscle/document.hpp"
#include "corpuscle/errors.hpp"
#include "corpuscle/term_vector.hpp"

namespace corpuscle {

struct TermStats {
  std::int64_t collection_count = 0;
  std::int64_t doc_freq = 0;
  std::map<std::string, std::int64_t> per_user_count;

  bool operator==(const TermStats&) const = default;
};

/// Term statistics for one corpus. Built once by build_index and treated as
/// immutable afterwards; leave_user_out returns a new index.
struct CorpusIndex {
  std::int64_t doc_count = 0;
  std::map<std::string, TermStats> term_stats;
  std::map<std::string, std::map<std::string, std::int64_t>> doc_term_counts;
  std::map<std::string, std::string> doc_authors;

  bool operator==(const CorpusIndex&) const = default;

  std::int64_t total_tokens() const {
    std::int64_t total = 0;
    for (const auto& [term, stats] : term_stats) total += stats.collection_count;
    return total;
  }

  bool has_user(const std::string& pseudonym) const {
    for (const auto& [doc, author] : doc_authors)
      if (author == pseudonym) return true;
    return false;
  }

  std::set<std::string> users() const {
    std::set<std::string> out;
    for (const auto& [doc, author] : doc_authors) out.insert(author);
    return out;
  }
};

/// k highest-weighted terms, descending weight, ties ascending-lexicographic.
struct RankedKeywords {
  std::vector<std::pair<std::string, double>> items;
  std::size_t k = 0;

  std::set<std::string> term_set() const {
    std::set<std::string> out;
    for (const auto& [term, weight] : items) out.insert(term);
    return out;
  }
};

/// Counting key of a token: the stem, which equals the surface whenever
/// stemming is disabled.
inline const std::string& counting_key(const Token& t) { return t.stem; }

inline CorpusIndex build_index(std::span<const Document> docs) {
  CorpusIndex index;
  for (const Document& doc : docs) {
    if (index.doc_term_counts.count(doc.doc_id))
      throw Error(Errc::DuplicateDocId, doc.doc_id);
    auto& counts = index.doc_term_counts[doc.doc_id];
    index.doc_authors[doc.doc_id] = doc.author;
    for (const Token& token : doc.tokens) ++counts[counting_key(token)];
    for (const auto& [term, count] : counts) {
      TermStats& stats = index.term_stats[term];
      stats.collection_count += count;
      stats.doc_freq += 1;
      stats.per_user_count[doc.author] += count;
    }
    ++index.doc_count;
  }
  return index;
}

/// ln(N / df). Absent terms are an error so that "never seen" cannot be
/// confused with "appears everywhere".
inline double idf(const CorpusIndex& index, const std::string& term) {
  if (index.doc_count == 0) throw Error(Errc::EmptyCorpus, "idf on empty corpus");
  auto it = index.term_stats.find(term);
  if (it == index.term_stats.end() || it->second.doc_freq == 0)
    throw Error(Errc::UnknownTerm, term);
  return std::log(static_cast<double>(index.doc_count) /
                  static_cast<double>(it->second.doc_freq));
}

inline TermVector corpus_vector(const CorpusIndex& index, WeightingMode mode) {
  if (index.doc_count == 0) throw Error(Errc::EmptyCorpus, "corpus_vector on empty corpus");
  TermVector v{{}, mode};
  const double total = static_cast<double>(index.total_tokens());
  for (const auto& [term, stats] : index.term_stats) {
    const double count = static_cast<double>(stats.collection_count);
    switch (mode) {
      case WeightingMode::RawCount:
        v.entries.emplace(term, count);
        break;
      case WeightingMode::RelFreq:
        v.entries.emplace(term, count / total);
        break;
      case WeightingMode::TfIdf:
        v.entries.emplace(term, count * idf(index, term));
        break;
    }
  }
  return v;
}

inline RankedKeywords top_k(const CorpusIndex& index, std::size_t k, WeightingMode mode,
                            const std::set<std::string>& exclude = {}) {
  RankedKeywords ranked;
  ranked.k = k;
  if (k == 0) return ranked;
  TermVector v = corpus_vector(index, mode);
  ranked.items.reserve(v.entries.size());
  for (const auto& [term, weight] : v.entries) {
    if (exclude.count(term)) continue;
    ranked.items.emplace_back(term, weight);
  }
  std::sort(ranked.items.begin(), ranked.items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.items.size() > k) ranked.items.resize(k);
  return ranked;
}

enum class LeaveOutMode { SubtractCounts, DropTypes };

/// Removes one user's contribution. SubtractCounts yields exactly what
/// rebuilding without the user's documents would. DropTypes additionally
/// deletes every term type the user contributed to, corpus-wide.
inline CorpusIndex leave_user_out(const CorpusIndex& index, const std::string& pseudonym,
                                  LeaveOutMode mode = LeaveOutMode::SubtractCounts) {
  CorpusIndex out = index;
  std::vector<std::string> user_docs;
  for (const auto& [doc, author] : out.doc_authors)
    if (author == pseudonym) user_docs.push_back(doc);
  if (user_docs.empty()) return out;  // unknown user: identity

  std::map<std::string, std::int64_t> contribution;
  for (const std::string& doc : user_docs) {
    for (const auto& [term, count] : out.doc_term_counts[doc]) contribution[term] += count;
    out.doc_term_counts.erase(doc);
    out.doc_authors.erase(doc);
    --out.doc_count;
  }

  for (const auto& [term, removed] : contribution) {
    TermStats& stats = out.term_stats[term];
    stats.collection_count -= removed;
    stats.per_user_count.erase(pseudonym);
    if (stats.collection_count == 0) {
      out.term_stats.erase(term);
      continue;
    }
    std::int64_t df = 0;
    for (const auto& [doc, counts] : out.doc_term_counts) df += counts.count(term) ? 1 : 0;
    stats.doc_freq = df;
  }

  if (mode == LeaveOutMode::DropTypes) {
    for (const auto& [term, removed] : contribution) {
      out.term_stats.erase(term);
      for (auto& [doc, counts] : out.doc_term_counts) counts.erase(term);
    }
  }
  return out;
}

}  // namespace corpuscle

#endif  // CORPUSCLE_INDEX_HPP
