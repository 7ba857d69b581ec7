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

#ifndef CORPUSCLE_VALIDATE_HPP
#define CORPUSCLE_VALIDATE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corpuscle/errors.hpp"
#include "corpuscle/index.hpp"
#include "corpuscle/lexicon.hpp"
#include "corpuscle/stats.hpp"
#include "corpuscle/store.hpp"
#include "corpuscle/term_vector.hpp"

namespace corpuscle {

enum class AlignmentMode { IntersectionDictWords, UnionAll };

inline const char* alignment_name(AlignmentMode mode) {
  return mode == AlignmentMode::IntersectionDictWords ? "dict-intersection" : "union";
}

/// Two weight arrays over a shared, lexicographically ordered vocabulary.
struct AlignedVectors {
  std::vector<std::string> vocabulary;
  std::vector<double> a_weights;
  std::vector<double> b_weights;
  AlignmentMode alignment_mode = AlignmentMode::IntersectionDictWords;
};

/// IntersectionDictWords: dictionary words present in both vectors.
/// UnionAll: every term from either vector, absent entries weighted zero.
inline AlignedVectors align(const TermVector& a, const TermVector& b, const Dictionary& dict,
                            AlignmentMode mode) {
  if (a.mode != b.mode)
    throw Error(Errc::ModeMismatch, "cannot align vectors with different weighting modes");
  AlignedVectors out;
  out.alignment_mode = mode;
  if (mode == AlignmentMode::IntersectionDictWords) {
    for (const auto& [term, weight] : a.entries) {
      auto in_b = b.entries.find(term);
      if (in_b == b.entries.end()) continue;
      if (classify_vocab(term, dict) != VocabClass::Standard) continue;
      out.vocabulary.push_back(term);
      out.a_weights.push_back(weight);
      out.b_weights.push_back(in_b->second);
    }
    if (out.vocabulary.empty())
      throw Error(Errc::EmptyAlignment, "no shared dictionary words between the vectors");
  } else {
    auto ia = a.entries.begin();
    auto ib = b.entries.begin();
    while (ia != a.entries.end() || ib != b.entries.end()) {
      if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
        out.vocabulary.push_back(ia->first);
        out.a_weights.push_back(ia->second);
        out.b_weights.push_back(0.0);
        ++ia;
      } else if (ia == a.entries.end() || ib->first < ia->first) {
        out.vocabulary.push_back(ib->first);
        out.a_weights.push_back(0.0);
        out.b_weights.push_back(ib->second);
        ++ib;
      } else {
        out.vocabulary.push_back(ia->first);
        out.a_weights.push_back(ia->second);
        out.b_weights.push_back(ib->second);
        ++ia;
        ++ib;
      }
    }
  }
  return out;
}

inline double pearson(const AlignedVectors& av) { return pearson(av.a_weights, av.b_weights); }
inline double spearman(const AlignedVectors& av) { return spearman(av.a_weights, av.b_weights); }

/// Outcome of one standard-vs-social comparison.
struct ValidationReport {
  std::optional<double> pearson_r;
  std::optional<double> spearman_rho;
  double overlap_at_k = 0.0;
  double jaccard_top_k = 0.0;
  std::size_t k = 16;
  std::int64_t sample_size = 0;
  AlignmentMode alignment_mode = AlignmentMode::IntersectionDictWords;
  WeightingMode weighting_mode = WeightingMode::RelFreq;
  std::vector<std::string> notes;
  RankedKeywords top_standard;  // kept for chart emission
  RankedKeywords top_social;
};

struct CompareOptions {
  std::size_t k = 16;
  WeightingMode weighting = WeightingMode::RelFreq;
  AlignmentMode alignment = AlignmentMode::IntersectionDictWords;
  // Terms excluded from the social top-k (the seed hashtags by default,
  // which would otherwise inflate overlap with themselves).
  std::set<std::string> exclude_social_terms;
};

inline double overlap_at_k(const RankedKeywords& a, const RankedKeywords& b, std::size_t k) {
  if (k == 0) return 0.0;
  const std::set<std::string> sa = a.term_set();
  const std::set<std::string> sb = b.term_set();
  std::size_t shared = 0;
  for (const std::string& t : sa) shared += sb.count(t);
  return static_cast<double>(shared) / static_cast<double>(k);
}

inline double jaccard_top_k(const RankedKeywords& a, const RankedKeywords& b) {
  const std::set<std::string> sa = a.term_set();
  const std::set<std::string> sb = b.term_set();
  std::size_t shared = 0;
  for (const std::string& t : sa) shared += sb.count(t);
  const std::size_t unions = sa.size() + sb.size() - shared;
  if (unions == 0) return 0.0;
  return static_cast<double>(shared) / static_cast<double>(unions);
}

/// Compares the social corpus keyword vector against the standard one over
/// shared dictionary words. Degenerate statistics annotate the report
/// instead of failing the run.
inline ValidationReport compare_corpora(const CorpusIndex& standard, const CorpusIndex& social,
                                        const Dictionary& dict, const CompareOptions& opts = {}) {
  ValidationReport report;
  report.k = opts.k;
  report.sample_size = social.doc_count;
  report.alignment_mode = opts.alignment;
  report.weighting_mode = opts.weighting;

  const TermVector standard_vec = corpus_vector(standard, opts.weighting);
  const TermVector social_vec = corpus_vector(social, opts.weighting);

  const auto [std_dict_terms, std_oov_terms] = split_vector_by_vocab(standard_vec, dict);
  const auto [soc_dict_terms, soc_oov_terms] = split_vector_by_vocab(social_vec, dict);
  report.notes.push_back("dictionary=" + dict.name);
  report.notes.push_back("standard_terms=" + std::to_string(standard_vec.entries.size()) +
                         " (oov " + std::to_string(std_oov_terms.entries.size()) + ")");
  report.notes.push_back("social_terms=" + std::to_string(social_vec.entries.size()) + " (oov " +
                         std::to_string(soc_oov_terms.entries.size()) + ")");

  try {
    const AlignedVectors av = align(standard_vec, social_vec, dict, opts.alignment);
    report.notes.push_back("aligned_terms=" + std::to_string(av.vocabulary.size()));
    try {
      report.pearson_r = pearson(av);
    } catch (const Error& e) {
      report.notes.push_back(std::string("pearson unavailable: ") + e.what());
    }
    try {
      report.spearman_rho = spearman(av);
    } catch (const Error& e) {
      report.notes.push_back(std::string("spearman unavailable: ") + e.what());
    }
  } catch (const Error& e) {
    report.notes.push_back(std::string("alignment unavailable: ") + e.what());
  }

  report.top_standard = top_k(standard, opts.k, opts.weighting);
  report.top_social = top_k(social, opts.k, opts.weighting, opts.exclude_social_terms);
  report.overlap_at_k = overlap_at_k(report.top_standard, report.top_social, opts.k);
  report.jaccard_top_k = jaccard_top_k(report.top_standard, report.top_social);
  return report;
}

/// Rank (1-based, full ranking) and relative frequency of one tracked term
/// at one sample size; rank is absent when the term did not occur.
struct TrajectoryPoint {
  std::int64_t sample_size = 0;
  std::optional<std::size_t> rank;
  double rel_freq = 0.0;
};

struct SweepResult {
  std::vector<ValidationReport> reports;
  std::map<std::string, std::vector<TrajectoryPoint>> trajectories;
};

/// Sample-size sweep: one comparison per configured size, each on a seeded
/// subsample of the tweet pool, plus rank trajectories of every term that
/// reaches a top-k list at any size.
inline SweepResult sweep(const CorpusIndex& standard, std::span<const Document> tweets,
                         const HarvestConfig& harvest, const Dictionary& dict,
                         const CompareOptions& opts = {}) {
  harvest.validate();
  SweepResult result;
  std::vector<std::pair<std::int64_t, CorpusIndex>> sampled;

  std::set<std::int64_t> sizes_done;
  for (const std::int64_t requested : harvest.sample_sizes) {
    std::int64_t n = requested;
    std::string truncation_note;
    if (n > static_cast<std::int64_t>(tweets.size())) {
      n = static_cast<std::int64_t>(tweets.size());
      truncation_note = "requested " + std::to_string(requested) + " tweets, only " +
                        std::to_string(n) + " available (truncated)";
    }
    if (n == 0 || !sizes_done.insert(n).second) continue;
    const std::uint64_t sub_seed =
        derive_seed(harvest.rng_seed, static_cast<std::uint64_t>(requested));
    const std::vector<Document> sample = subsample(tweets, static_cast<std::size_t>(n), sub_seed);
    const CorpusIndex social = build_index(sample);
    ValidationReport report = compare_corpora(standard, social, dict, opts);
    report.sample_size = n;
    if (!truncation_note.empty()) report.notes.push_back(truncation_note);
    report.notes.push_back("rng_seed=" + std::to_string(harvest.rng_seed));
    result.reports.push_back(std::move(report));
    sampled.emplace_back(n, std::move(social));
  }

  std::set<std::string> tracked;
  for (const ValidationReport& r : result.reports) {
    for (const auto& [term, weight] : r.top_social.items) tracked.insert(term);
    for (const auto& [term, weight] : r.top_standard.items) tracked.insert(term);
  }
  for (const auto& [n, social] : sampled) {
    const RankedKeywords full = top_k(social, social.term_stats.size(), opts.weighting);
    std::map<std::string, std::size_t> rank_of;
    for (std::size_t pos = 0; pos < full.items.size(); ++pos)
      rank_of.emplace(full.items[pos].first, pos + 1);
    const double total = static_cast<double>(social.total_tokens());
    for (const std::string& term : tracked) {
      TrajectoryPoint point;
      point.sample_size = n;
      auto rank_it = rank_of.find(term);
      if (rank_it != rank_of.end()) point.rank = rank_it->second;
      auto stats_it = social.term_stats.find(term);
      if (stats_it != social.term_stats.end())
        point.rel_freq = static_cast<double>(stats_it->second.collection_count) / total;
      result.trajectories[term].push_back(point);
    }
  }
  return result;
}

/// Per-user screening against the (leave-one-user-out) corpus keywords.
struct ScreeningReport {
  std::string pseudonym;
  std::size_t user_vector_size = 0;
  double overlap_at_k = 0.0;
  double cosine_similarity = 0.0;
  std::optional<double> pearson_r;
  enum class CorpusMode { Full, LeaveUserOut };
  CorpusMode corpus_mode_used = CorpusMode::Full;
  std::vector<std::string> notes;
};

inline ScreeningReport screen_user(const UserRecord& user, std::span<const Document> docs,
                                   const CorpusIndex& corpus, const Dictionary& dict,
                                   std::size_t k) {
  std::vector<Document> user_documents;
  const std::set<std::string> wanted(user.doc_ids.begin(), user.doc_ids.end());
  for (const Document& doc : docs)
    if (wanted.count(doc.doc_id)) user_documents.push_back(doc);
  if (user_documents.empty())
    throw Error(Errc::NoUserDocuments, user.pseudonym + " has no documents");

  ScreeningReport report;
  report.pseudonym = user.pseudonym;

  const CorpusIndex user_index = build_index(user_documents);
  const TermVector user_vec = corpus_vector(user_index, WeightingMode::RelFreq);
  report.user_vector_size = user_vec.entries.size();

  CorpusIndex reference = corpus;
  if (corpus.has_user(user.pseudonym)) {
    report.corpus_mode_used = ScreeningReport::CorpusMode::LeaveUserOut;
    reference = leave_user_out(corpus, user.pseudonym);
  }
  if (reference.doc_count == 0 || reference.term_stats.empty()) {
    report.notes.push_back("corpus empty after leave-one-user-out");
    return report;
  }

  const TermVector reference_vec = corpus_vector(reference, WeightingMode::RelFreq);
  const RankedKeywords user_top = top_k(user_index, k, WeightingMode::RelFreq);
  const RankedKeywords corpus_top = top_k(reference, k, WeightingMode::RelFreq);
  report.overlap_at_k = overlap_at_k(user_top, corpus_top, k);

  const AlignedVectors av = align(user_vec, reference_vec, dict, AlignmentMode::UnionAll);
  report.cosine_similarity = cosine_similarity(av.a_weights, av.b_weights);
  try {
    report.pearson_r = pearson(av);
  } catch (const Error& e) {
    report.notes.push_back(std::string("pearson unavailable: ") + e.what());
  }
  return report;
}

}  // namespace corpuscle

#endif  // CORPUSCLE_VALIDATE_HPP
