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

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "corpuscle/store.hpp"
#include "support/generators.hpp"
#include "support/temp_dir.hpp"

using namespace corpuscle;
using corpuscle_tests::Rng;
using corpuscle_tests::TempDir;
using corpuscle_tests::read_file;

namespace {

const std::string kKey = "0123456789abcdef";

StopList tiny_stops() {
  StopList stops;
  stops.words = {"the", "of", "and", "for", "to"};
  return stops;
}

}  // namespace

TEST_CASE("pseudonymize is deterministic, keyed, and hides the handle") {
  const std::string p1 = pseudonymize("alice", kKey);
  CHECK(p1 == pseudonymize("alice", kKey));
  CHECK(p1 != "alice");
  CHECK(p1.find("alice") == std::string::npos);
  CHECK(p1.rfind("u:", 0) == 0);
  CHECK(p1.size() == 18);
  for (std::size_t i = 2; i < p1.size(); ++i)
    CHECK(((p1[i] >= '0' && p1[i] <= '9') || (p1[i] >= 'a' && p1[i] <= 'f')));

  CHECK(pseudonymize("alice", kKey) != pseudonymize("bob", kKey));

  try {
    pseudonymize("alice", "shortkey");
    FAIL("expected WeakKey");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WeakKey);
  }
  CHECK_THROWS_AS(pseudonymize("", kKey), Error);
}

TEST_CASE("different keys give different pseudonyms") {
  Rng rng(0x6e75);
  for (int round = 0; round < 100; ++round) {
    std::string k1, k2;
    for (int i = 0; i < 16; ++i) {
      k1.push_back(static_cast<char>('a' + rng.below(26)));
      k2.push_back(static_cast<char>('a' + rng.below(26)));
    }
    if (k1 == k2) continue;
    CHECK(pseudonymize("alice", k1) != pseudonymize("alice", k2));
  }
}

TEST_CASE("ingest_essays reads a directory of txt files") {
  TempDir tmp("essays");
  tmp.write("essays/one.txt", "Sleep and mood.");
  tmp.write("essays/two.txt", "Mood for therapy.");
  tmp.write("essays/three.txt", "Therapy of sleep.");
  tmp.write("essays/ignored.md", "not ingested");

  const auto docs = ingest_essays(tmp.file("essays"), {}, tiny_stops());
  REQUIRE(docs.size() == 3);
  CHECK(docs[0].doc_id == "one");
  CHECK(docs[0].source == SourceKind::StandardEssay);
  CHECK(docs[0].author == std::string(kStandardCorpusAuthor));
  CHECK(docs[0].hashtags.empty());
  // "and"/"for"/"of" stop-listed
  CHECK(docs[0].tokens.size() == 2);

  SUBCASE("unreadable file is recorded and the run continues") {
    std::filesystem::create_symlink(tmp.file("essays/gone.txt"),
                                    tmp.file("essays/broken.txt"));
    IngestReport report;
    const auto partial = ingest_essays(tmp.file("essays"), {}, tiny_stops(), &report);
    CHECK(partial.size() == 3);
    REQUIRE(report.file_errors.size() == 1);
    CHECK(report.file_errors[0].find("broken.txt") != std::string::npos);
  }

  SUBCASE("empty and missing directories") {
    TempDir empty("essays_empty");
    try {
      ingest_essays(empty.path(), {}, tiny_stops());
      FAIL("expected EmptyDirectory");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::EmptyDirectory);
    }
    try {
      ingest_essays(empty.file("nowhere"), {}, tiny_stops());
      FAIL("expected FileMissing");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::FileMissing);
    }
  }
}

TEST_CASE("ingest_tweets parses, pseudonymizes and skips malformed lines") {
  TempDir tmp("tweets");
  const std::string jsonl =
      R"({"id": "t1", "user": "RealName_1", "text": "no sleep tonight #depression", "created_at": "2018-02-01T10:00:00Z"})"
      "\n"
      R"({"id": "t2", "user": "RealName_2", "text": "mood is heavy #depressed"})"
      "\n"
      R"({"id": "t3", "user": "RealName_1", "text": "still no sleep #depression"})"
      "\n"
      R"({"id": "t4", "user": "RealName_3"})"
      "\n"
      "not json at all\n"
      R"({"id": "", "user": "RealName_4", "text": "blank id"})"
      "\n"
      R"({"id": "t1", "user": "RealName_9", "text": "duplicate id"})"
      "\n";
  const auto path = tmp.write("tweets.jsonl", jsonl);

  IngestReport report;
  const auto [docs, users] = ingest_tweets(path, {}, tiny_stops(), kKey, &report);
  CHECK(report.total_lines == 7);
  CHECK(report.malformed_lines == 3);
  CHECK(report.duplicate_ids == 1);
  REQUIRE(docs.size() == 3);
  CHECK(docs[0].doc_id == "t1");
  CHECK(docs[0].source == SourceKind::Tweet);
  CHECK(docs[0].hashtags == std::set<std::string>{"depression"});
  CHECK(docs[0].collected_at.has_value());
  CHECK_FALSE(docs[1].collected_at.has_value());
  for (const Document& d : docs) {
    CHECK(d.author.rfind("u:", 0) == 0);
    CHECK(d.author.find("RealName") == std::string::npos);
  }

  // two tweets share a handle -> one record with two doc ids
  REQUIRE(users.size() == 2);
  const std::string shared = pseudonymize("RealName_1", kKey);
  bool found = false;
  for (const UserRecord& u : users) {
    if (u.pseudonym == shared) {
      CHECK(u.doc_ids == std::vector<std::string>{"t1", "t3"});
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("ingest_tweets error paths") {
  TempDir tmp("tweets_err");
  try {
    ingest_tweets(tmp.file("missing.jsonl"), {}, tiny_stops(), kKey);
    FAIL("expected FileMissing");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FileMissing);
  }
  const auto junk = tmp.write("junk.jsonl", "nope\n{\"id\": 3}\n");
  try {
    ingest_tweets(junk, {}, tiny_stops(), kKey);
    FAIL("expected AllLinesMalformed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AllLinesMalformed);
  }
}

TEST_CASE("seed hashtag filter") {
  TempDir tmp("tweets_filter");
  const auto path = tmp.write(
      "tweets.jsonl",
      R"({"id": "t1", "user": "A_1", "text": "sleepless again #depression"})" "\n"
      R"({"id": "t2", "user": "B_2", "text": "lovely #garden day"})" "\n"
      R"({"id": "t3", "user": "C_3", "text": "down again #FeelingDown"})" "\n");
  const auto [docs, users] = ingest_tweets(path, {}, tiny_stops(), kKey);
  IngestReport report;
  const auto kept = filter_by_seed_hashtags(docs, HarvestConfig{}.seed_hashtags, &report);
  REQUIRE(kept.size() == 2);
  CHECK(kept[0].doc_id == "t1");
  CHECK(kept[1].doc_id == "t3");  // tags are case-folded at extraction
  CHECK(report.filtered_out == 1);
}

TEST_CASE("harvest config invariants") {
  HarvestConfig good;
  CHECK_NOTHROW(good.validate());
  HarvestConfig no_tags;
  no_tags.seed_hashtags.clear();
  CHECK_THROWS_AS(no_tags.validate(), Error);
  HarvestConfig not_increasing;
  not_increasing.sample_sizes = {100, 100};
  CHECK_THROWS_AS(not_increasing.validate(), Error);
}

TEST_CASE("subsample basics") {
  Rng rng(0x5a5a);
  corpuscle_tests::RandomCorpusOptions opts;
  opts.min_docs = 10;
  opts.max_docs = 10;
  const auto docs = corpuscle_tests::random_corpus(rng, opts);

  CHECK(subsample(docs, 0, 1).empty());
  const auto all = subsample(docs, docs.size(), 1);
  CHECK(all.size() == docs.size());
  const auto more = subsample(docs, docs.size() + 5, 1);
  CHECK(more.size() == docs.size());

  const auto s1 = subsample(docs, 4, 99);
  const auto s2 = subsample(docs, 4, 99);
  REQUIRE(s1.size() == 4);
  CHECK(s1 == s2);  // determinism

  // sample ignores input order
  std::vector<Document> shuffled(docs.rbegin(), docs.rend());
  CHECK(subsample(shuffled, 4, 99) == s1);

  std::set<std::string> ids;
  for (const Document& d : s1) ids.insert(d.doc_id);
  CHECK(ids.size() == 4);  // without replacement
}

TEST_CASE("subsample uniformity sanity check") {
  corpuscle_tests::RandomCorpusOptions opts;
  Rng rng(0xc41);
  opts.min_docs = 10;
  opts.max_docs = 10;
  const auto docs = corpuscle_tests::random_corpus(rng, opts);

  std::map<std::string, int> inclusion;
  const int trials = 10000;
  const std::size_t n = 5;
  for (int t = 0; t < trials; ++t) {
    for (const Document& d : subsample(docs, n, 1000 + static_cast<std::uint64_t>(t)))
      ++inclusion[d.doc_id];
  }
  // chi-squared against uniform inclusion probability n/N = 1/2;
  // 9 dof, p > 0.001 -> statistic below 27.88
  const double expected = trials * 0.5;
  double chi2 = 0.0;
  for (const Document& d : docs) {
    const double diff = inclusion[d.doc_id] - expected;
    chi2 += diff * diff / expected;
  }
  CHECK(chi2 < 27.88);
}

TEST_CASE("snapshot round trip") {
  TempDir tmp("snap");
  Rng rng(0xdead);
  corpuscle_tests::RandomCorpusOptions opts;
  opts.user_count = 4;
  for (int round = 0; round < 25; ++round) {
    std::vector<Document> docs = corpuscle_tests::random_corpus(rng, opts);
    for (std::size_t i = 0; i < docs.size(); ++i) {
      docs[i].hashtags = {"depression"};
      if (i % 2 == 0) docs[i].collected_at = "2018-02-01T00:00:00Z";
      docs[i].raw_text = "raw text that must not be persisted";
    }
    const CorpusIndex index = build_index(docs);
    std::map<std::string, std::vector<std::string>> by_user;
    for (const Document& d : docs) by_user[d.author].push_back(d.doc_id);
    std::vector<UserRecord> users;
    for (auto& [p, ids] : by_user) {
      std::sort(ids.begin(), ids.end());
      users.push_back(UserRecord{p, ids});
    }

    const auto path = tmp.file("snap" + std::to_string(round) + ".json");
    save_snapshot(index, docs, users, path);
    const Snapshot loaded = load_snapshot(path);

    CHECK(loaded.index == index);
    CHECK(loaded.users == users);
    REQUIRE(loaded.documents.size() == docs.size());
    std::vector<Document> expected = docs;
    std::sort(expected.begin(), expected.end(),
              [](const Document& a, const Document& b) { return a.doc_id < b.doc_id; });
    for (Document& d : expected) d.raw_text.clear();  // raw text never persisted
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(loaded.documents[i] == expected[i]);
  }
}

TEST_CASE("snapshot bytes are stable across rewrites") {
  TempDir tmp("snap_bytes");
  Rng rng(0xb17e);
  const auto docs = corpuscle_tests::random_corpus(rng);
  const CorpusIndex index = build_index(docs);
  save_snapshot(index, docs, {}, tmp.file("a.json"));
  save_snapshot(index, docs, {}, tmp.file("b.json"));
  CHECK(read_file(tmp.file("a.json")) == read_file(tmp.file("b.json")));

  const Snapshot loaded = load_snapshot(tmp.file("a.json"));
  save_snapshot(loaded.index, loaded.documents, loaded.users, tmp.file("c.json"));
  CHECK(read_file(tmp.file("a.json")) == read_file(tmp.file("c.json")));
}

TEST_CASE("snapshot failure modes") {
  TempDir tmp("snap_err");
  try {
    load_snapshot(tmp.file("missing.json"));
    FAIL("expected FileMissing");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FileMissing);
  }

  const auto corrupt = tmp.write("corrupt.json", "{ not json");
  try {
    load_snapshot(corrupt);
    FAIL("expected CorruptSnapshot");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CorruptSnapshot);
  }

  const auto wrong = tmp.write("wrong.json", R"({"schema_version": 999})");
  try {
    load_snapshot(wrong);
    FAIL("expected SchemaMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SchemaMismatch);
  }

  const auto partial = tmp.write("partial.json", R"({"schema_version": 1, "index": {}})");
  try {
    load_snapshot(partial);
    FAIL("expected CorruptSnapshot");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CorruptSnapshot);
  }

  const CorpusIndex index;
  try {
    save_snapshot(index, {}, {}, tmp.file("no_dir") / "x" / "snap.json");
    FAIL("expected UnwritablePath");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnwritablePath);
  }
}

TEST_CASE("derive_seed varies with both inputs") {
  CHECK(derive_seed(1, 100) != derive_seed(1, 200));
  CHECK(derive_seed(1, 100) != derive_seed(2, 100));
  CHECK(derive_seed(1, 100) == derive_seed(1, 100));
}
