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

#include "corpuscle/run_config.hpp"
#include "support/temp_dir.hpp"

using namespace corpuscle;
using corpuscle_tests::TempDir;

TEST_CASE("config file values land in the run config") {
  TempDir tmp("cfg");
  const auto path = tmp.write("run.cfg",
                              "# comment\n"
                              "k = 10\n"
                              "weighting = tfidf\n"
                              "alignment = union\n"
                              "stemming = on\n"
                              "seed = 99\n"
                              "hashtags = depression, bluedays\n"
                              "sizes = 50, 150\n"
                              "keep_seed_terms = true\n"
                              "min_token_length = 3\n");
  RunConfig cfg;
  load_config_file(cfg, path);
  CHECK(cfg.k == 10);
  CHECK(cfg.weighting == WeightingMode::TfIdf);
  CHECK(cfg.alignment == AlignmentMode::UnionAll);
  CHECK(cfg.normalize.stemming_enabled);
  CHECK(cfg.harvest.rng_seed == 99);
  CHECK(cfg.harvest.seed_hashtags == std::set<std::string>{"depression", "bluedays"});
  CHECK(cfg.harvest.sample_sizes == std::vector<std::int64_t>{50, 150});
  CHECK(cfg.keep_seed_terms);
  CHECK(cfg.normalize.min_token_length == 3);
  CHECK(cfg.social_exclusions().empty());  // keep_seed_terms disables exclusion
}

TEST_CASE("unknown keys and malformed lines are rejected") {
  TempDir tmp("cfg");
  RunConfig cfg;
  CHECK_THROWS_AS(load_config_file(cfg, tmp.write("bad.cfg", "typo_key = 1\n")), Error);
  CHECK_THROWS_AS(load_config_file(cfg, tmp.write("noeq.cfg", "just words\n")), Error);
  CHECK_THROWS_AS(load_config_file(cfg, tmp.file("missing.cfg")), Error);
  CHECK_THROWS_AS(parse_weighting("fancy"), Error);
  CHECK_THROWS_AS(parse_alignment("sideways"), Error);
}

TEST_CASE("defaults mirror the documented experiment setup") {
  RunConfig cfg;
  CHECK(cfg.k == 16);
  CHECK(cfg.weighting == WeightingMode::RelFreq);
  CHECK(cfg.alignment == AlignmentMode::IntersectionDictWords);
  CHECK_FALSE(cfg.normalize.stemming_enabled);
  CHECK(cfg.normalize.keep_hashtag_tokens);
  CHECK(cfg.normalize.min_token_length == 2);
  CHECK(cfg.harvest.seed_hashtags ==
        std::set<std::string>{"depression", "depressed", "feelingdown"});
  CHECK(cfg.harvest.sample_sizes == std::vector<std::int64_t>{100, 200, 500, 1000});
  CHECK_FALSE(cfg.keep_seed_terms);
  CHECK(cfg.social_exclusions() == cfg.harvest.seed_hashtags);
}

TEST_CASE("provenance notes echo the resolved settings") {
  RunConfig cfg;
  cfg.k = 12;
  cfg.normalize.stemming_enabled = true;
  const auto notes = cfg.provenance_notes();
  bool saw_k = false, saw_stemming = false, saw_seed_tags = false;
  for (const std::string& note : notes) {
    if (note == "k=12") saw_k = true;
    if (note == "stemming=on") saw_stemming = true;
    if (note.rfind("seed_hashtags=", 0) == 0) saw_seed_tags = true;
  }
  CHECK(saw_k);
  CHECK(saw_stemming);
  CHECK(saw_seed_tags);
}

TEST_CASE("compare options carry k, weighting, alignment and exclusions") {
  RunConfig cfg;
  cfg.k = 8;
  cfg.weighting = WeightingMode::RawCount;
  const CompareOptions opts = cfg.compare_options();
  CHECK(opts.k == 8);
  CHECK(opts.weighting == WeightingMode::RawCount);
  CHECK(opts.alignment == AlignmentMode::IntersectionDictWords);
  CHECK(opts.exclude_social_terms == cfg.harvest.seed_hashtags);
}
