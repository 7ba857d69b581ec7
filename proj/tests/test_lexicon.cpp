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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpuscle/lexicon.hpp"
#include "support/generators.hpp"
#include "support/temp_dir.hpp"

using namespace corpuscle;
using corpuscle_tests::TempDir;

TEST_CASE("stop list loads, lowercases and deduplicates") {
  TempDir tmp("lexicon");
  const auto path = tmp.write("stops.txt", "the\nand\nfor\nto\n");
  const StopList stops = load_stoplist(path);
  CHECK(stops.size() == 4);
  CHECK(stops.contains("for"));
  CHECK_FALSE(stops.contains("sleep"));

  const auto folded = tmp.write("folded.txt", "The\nthe\n");
  CHECK(load_stoplist(folded).size() == 1);

  const auto commented = tmp.write("commented.txt", "# comment\n\nthe\n  and  \nbad entry\n");
  const StopList commented_list = load_stoplist(commented);
  CHECK(commented_list.size() == 2);
}

TEST_CASE("stop list error paths") {
  TempDir tmp("lexicon");
  try {
    load_stoplist(tmp.file("missing.txt"));
    FAIL("expected FileMissing");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FileMissing);
  }
  const auto empty = tmp.write("empty.txt", "# nothing but comments\n\n");
  try {
    load_stoplist(empty);
    FAIL("expected EmptyList");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyList);
  }
}

TEST_CASE("dictionary load carries a provenance name") {
  TempDir tmp("lexicon");
  const auto path = tmp.write("words_en.txt", "sleep\nmood\n");
  const Dictionary dict = load_dictionary(path);
  CHECK(dict.name == "words_en");
  CHECK(dict.size() == 2);
  const Dictionary named = load_dictionary(path, "custom");
  CHECK(named.name == "custom");
  CHECK_THROWS_AS(load_dictionary(tmp.file("nope.txt")), Error);
}

TEST_CASE("vocabulary classification") {
  Dictionary dict = corpuscle_tests::dictionary_over({"sleep", "mood"});
  CHECK(classify_vocab("sleep", dict) == VocabClass::Standard);
  CHECK(classify_vocab("whazzup", dict) == VocabClass::OOV);
  try {
    classify_vocab("", dict);
    FAIL("expected EmptyToken");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyToken);
  }
}

TEST_CASE("vector split by vocabulary") {
  const Dictionary dict = corpuscle_tests::dictionary_over({"sleep"});
  TermVector v{{{"sleep", 5.0}, {"whazzup", 2.0}}, WeightingMode::RawCount};
  const auto [standard, oov] = split_vector_by_vocab(v, dict);
  CHECK(standard.entries == std::map<std::string, double>{{"sleep", 5.0}});
  CHECK(oov.entries == std::map<std::string, double>{{"whazzup", 2.0}});
  CHECK(standard.mode == v.mode);
  CHECK(oov.mode == v.mode);

  const auto [empty_std, empty_oov] = split_vector_by_vocab(TermVector{}, dict);
  CHECK(empty_std.entries.empty());
  CHECK(empty_oov.entries.empty());

  TermVector all_standard{{{"sleep", 1.5}}, WeightingMode::RelFreq};
  const auto [s2, o2] = split_vector_by_vocab(all_standard, dict);
  CHECK(s2 == all_standard);
  CHECK(o2.entries.empty());
}

TEST_CASE("partition property: split then merge reconstructs the vector") {
  corpuscle_tests::Rng rng(0x9a7);
  const auto vocab = corpuscle_tests::test_vocabulary(24);
  for (int round = 0; round < 100; ++round) {
    Dictionary dict;
    dict.name = "rnd";
    for (const std::string& w : vocab)
      if (rng.below(2) == 0) dict.words.insert(w);
    TermVector v{{}, WeightingMode::RawCount};
    const std::size_t terms = rng.below(vocab.size());
    for (std::size_t i = 0; i < terms; ++i)
      v.entries[vocab[rng.below(vocab.size())]] = static_cast<double>(1 + rng.below(50));

    const auto [standard, oov] = split_vector_by_vocab(v, dict);
    TermVector merged{{}, v.mode};
    for (const auto& e : standard.entries) merged.entries.insert(e);
    for (const auto& e : oov.entries) {
      CHECK(merged.entries.insert(e).second);  // disjoint
    }
    CHECK(merged == v);
  }
}
