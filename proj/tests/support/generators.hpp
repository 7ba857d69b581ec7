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

#ifndef CORPUSCLE_TESTS_GENERATORS_HPP
#define CORPUSCLE_TESTS_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "corpuscle/document.hpp"
#include "corpuscle/lexicon.hpp"

namespace corpuscle_tests {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline std::vector<std::string> test_vocabulary(std::size_t size) {
  static const std::vector<std::string> base = {
      "sleep",  "mood",    "therapy", "pressure", "health", "life",    "abuse",  "mental",
      "rest",   "worry",   "night",   "energy",   "calm",   "storm",   "river",  "stone",
      "light",  "shadow",  "garden",  "winter",   "summer", "window",  "letter", "bridge",
      "silver", "copper",  "timber",  "harvest",  "meadow", "valley",  "harbor", "candle",
      "basket", "journey", "mirror",  "anchor",   "branch", "feather", "lantern", "marble"};
  std::vector<std::string> vocab;
  for (std::size_t i = 0; i < size; ++i) {
    if (i < base.size()) vocab.push_back(base[i]);
    else vocab.push_back("term" + std::to_string(i));
  }
  return vocab;
}

struct RandomCorpusOptions {
  std::size_t max_docs = 50;
  std::size_t min_docs = 1;
  std::size_t vocab_size = 12;
  std::size_t max_tokens_per_doc = 30;
  std::size_t user_count = 0;  // 0: every doc gets its own author
};

inline std::vector<corpuscle::Document> random_corpus(Rng& rng,
                                                      const RandomCorpusOptions& opts = {}) {
  const std::vector<std::string> vocab = test_vocabulary(opts.vocab_size);
  const std::size_t docs_n =
      opts.min_docs + rng.below(opts.max_docs - opts.min_docs + 1);
  std::vector<corpuscle::Document> docs;
  for (std::size_t d = 0; d < docs_n; ++d) {
    corpuscle::Document doc;
    doc.doc_id = "doc" + std::to_string(d);
    doc.source = corpuscle::SourceKind::Tweet;
    doc.author = opts.user_count == 0
                     ? "u:" + std::to_string(d)
                     : "u:" + std::to_string(rng.below(opts.user_count));
    const std::size_t tokens_n = 1 + rng.below(opts.max_tokens_per_doc);
    for (std::size_t t = 0; t < tokens_n; ++t) {
      const std::string& word = vocab[rng.below(vocab.size())];
      doc.tokens.push_back(corpuscle::Token{word, word, corpuscle::TokenOrigin::Word});
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

inline corpuscle::Dictionary dictionary_over(const std::vector<std::string>& words,
                                             const std::string& name = "test-dict") {
  corpuscle::Dictionary dict;
  dict.name = name;
  for (const std::string& w : words) dict.words.insert(w);
  return dict;
}

inline corpuscle::Dictionary full_test_dictionary(std::size_t vocab_size = 64) {
  return dictionary_over(test_vocabulary(vocab_size));
}

}  // namespace corpuscle_tests

#endif  // CORPUSCLE_TESTS_GENERATORS_HPP
