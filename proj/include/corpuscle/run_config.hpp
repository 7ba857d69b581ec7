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

#ifndef CORPUSCLE_RUN_CONFIG_HPP
#define CORPUSCLE_RUN_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "corpuscle/errors.hpp"
#include "corpuscle/normalize.hpp"
#include "corpuscle/store.hpp"
#include "corpuscle/term_vector.hpp"
#include "corpuscle/validate.hpp"

namespace corpuscle {

/// Fully resolved run settings: defaults, then config file, then flags.
/// The resolution is echoed into report notes for provenance.
struct RunConfig {
  NormalizeConfig normalize;
  HarvestConfig harvest;
  std::string stoplist_path;
  std::string dictionary_path;
  std::size_t k = 16;
  WeightingMode weighting = WeightingMode::RelFreq;
  AlignmentMode alignment = AlignmentMode::IntersectionDictWords;
  bool keep_seed_terms = false;

  std::set<std::string> social_exclusions() const {
    if (keep_seed_terms) return {};
    return harvest.seed_hashtags;
  }

  CompareOptions compare_options() const {
    CompareOptions opts;
    opts.k = k;
    opts.weighting = weighting;
    opts.alignment = alignment;
    opts.exclude_social_terms = social_exclusions();
    return opts;
  }

  std::vector<std::string> provenance_notes() const {
    std::vector<std::string> notes;
    notes.push_back("k=" + std::to_string(k));
    notes.push_back(std::string("weighting=") + weighting_name(weighting));
    notes.push_back(std::string("alignment=") + alignment_name(alignment));
    notes.push_back(std::string("stemming=") + (normalize.stemming_enabled ? "on" : "off"));
    notes.push_back(std::string("hashtag_tokens=") +
                    (normalize.keep_hashtag_tokens ? "kept" : "dropped"));
    notes.push_back("min_token_length=" + std::to_string(normalize.min_token_length));
    notes.push_back("seed=" + std::to_string(harvest.rng_seed));
    std::string seeds = "seed_hashtags=";
    bool first = true;
    for (const std::string& tag : harvest.seed_hashtags) {
      if (!first) seeds += "+";
      seeds += tag;
      first = false;
    }
    notes.push_back(seeds);
    notes.push_back(std::string("seed_terms=") + (keep_seed_terms ? "kept" : "excluded"));
    return notes;
  }
};

namespace config_detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline bool parse_bool(const std::string& v) {
  if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "off" || v == "0" || v == "no") return false;
  throw Error(Errc::EmptyList, "not a boolean: " + v);
}

inline std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : v) {
    if (c == ',') {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

}  // namespace config_detail

inline WeightingMode parse_weighting(const std::string& v) {
  if (v == "raw") return WeightingMode::RawCount;
  if (v == "relfreq") return WeightingMode::RelFreq;
  if (v == "tfidf") return WeightingMode::TfIdf;
  throw Error(Errc::EmptyList, "unknown weighting mode: " + v + " (raw|relfreq|tfidf)");
}

inline AlignmentMode parse_alignment(const std::string& v) {
  if (v == "dict-intersection") return AlignmentMode::IntersectionDictWords;
  if (v == "union") return AlignmentMode::UnionAll;
  throw Error(Errc::EmptyList, "unknown alignment mode: " + v + " (dict-intersection|union)");
}

/// Flat key = value file, '#' comments. Unknown keys are an error so that
/// typos do not silently fall back to defaults.
inline void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
  using namespace config_detail;
  if (key == "stoplist") {
    cfg.stoplist_path = value;
  } else if (key == "dictionary") {
    cfg.dictionary_path = value;
  } else if (key == "k") {
    cfg.k = static_cast<std::size_t>(std::stoul(value));
  } else if (key == "weighting") {
    cfg.weighting = parse_weighting(value);
  } else if (key == "alignment") {
    cfg.alignment = parse_alignment(value);
  } else if (key == "seed") {
    cfg.harvest.rng_seed = std::stoull(value);
  } else if (key == "stemming") {
    cfg.normalize.stemming_enabled = parse_bool(value);
  } else if (key == "keep_hashtag_tokens") {
    cfg.normalize.keep_hashtag_tokens = parse_bool(value);
  } else if (key == "min_token_length") {
    cfg.normalize.min_token_length = static_cast<std::size_t>(std::stoul(value));
    if (cfg.normalize.min_token_length < 1)
      throw Error(Errc::EmptyList, "min_token_length must be >= 1");
  } else if (key == "keep_seed_terms") {
    cfg.keep_seed_terms = parse_bool(value);
  } else if (key == "hashtags") {
    cfg.harvest.seed_hashtags.clear();
    for (const std::string& tag : split_list(value)) cfg.harvest.seed_hashtags.insert(tag);
  } else if (key == "sizes") {
    cfg.harvest.sample_sizes.clear();
    for (const std::string& n : split_list(value))
      cfg.harvest.sample_sizes.push_back(std::stoll(n));
  } else {
    throw Error(Errc::EmptyList, "unknown config key: " + key);
  }
}

inline void load_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw Error(Errc::FileMissing, path.string());
  std::string line;
  while (std::getline(in, line)) {
    const std::string trimmed = config_detail::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const std::size_t eq = trimmed.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::EmptyList, "config line is not key=value: " + trimmed);
    const std::string key = config_detail::trim(trimmed.substr(0, eq));
    const std::string value = config_detail::trim(trimmed.substr(eq + 1));
    apply_config_entry(cfg, key, value);
  }
}

}  // namespace corpuscle

#endif  // CORPUSCLE_RUN_CONFIG_HPP
