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

#ifndef CORPUSCLE_STORE_HPP
#define CORPUSCLE_STORE_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "corpuscle/document.hpp"
#include "corpuscle/errors.hpp"
#include "corpuscle/index.hpp"
#include "corpuscle/lexicon.hpp"
#include "corpuscle/normalize.hpp"

namespace corpuscle {

/// Replay-collection settings standing in for live hashtag harvesting.
struct HarvestConfig {
  std::set<std::string> seed_hashtags = {"depression", "depressed", "feelingdown"};
  std::vector<std::int64_t> sample_sizes = {100, 200, 500, 1000};
  std::uint64_t rng_seed = 42;

  void validate() const {
    if (seed_hashtags.empty())
      throw Error(Errc::EmptyList, "harvest config needs at least one seed hashtag");
    for (std::size_t i = 0; i + 1 < sample_sizes.size(); ++i)
      if (sample_sizes[i] >= sample_sizes[i + 1])
        throw Error(Errc::EmptyList, "sample sizes must be strictly increasing");
    for (std::int64_t n : sample_sizes)
      if (n <= 0) throw Error(Errc::EmptyList, "sample sizes must be positive");
  }
};

/// Per-run ingestion bookkeeping: per-file read failures and skipped lines
/// are collected, never fatal.
struct IngestReport {
  std::vector<std::string> file_errors;
  std::size_t total_lines = 0;
  std::size_t malformed_lines = 0;
  std::size_t duplicate_ids = 0;
  std::size_t filtered_out = 0;
};

namespace store_detail {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// SipHash-2-4 with a 128-bit key; the keyed one-way map behind pseudonyms.
class SipHash {
 public:
  static std::uint64_t hash(std::string_view data, std::string_view key16) {
    const auto le64 = [](const unsigned char* p) {
      std::uint64_t v = 0;
      for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
      return v;
    };
    const auto* kp = reinterpret_cast<const unsigned char*>(key16.data());
    const std::uint64_t k0 = le64(kp);
    const std::uint64_t k1 = le64(kp + 8);
    std::uint64_t v0 = 0x736f6d6570736575ULL ^ k0;
    std::uint64_t v1 = 0x646f72616e646f6dULL ^ k1;
    std::uint64_t v2 = 0x6c7967656e657261ULL ^ k0;
    std::uint64_t v3 = 0x7465646279746573ULL ^ k1;

    const auto rotl = [](std::uint64_t x, int b) { return (x << b) | (x >> (64 - b)); };
    const auto sipround = [&]() {
      v0 += v1;
      v1 = rotl(v1, 13);
      v1 ^= v0;
      v0 = rotl(v0, 32);
      v2 += v3;
      v3 = rotl(v3, 16);
      v3 ^= v2;
      v0 += v3;
      v3 = rotl(v3, 21);
      v3 ^= v0;
      v2 += v1;
      v1 = rotl(v1, 17);
      v1 ^= v2;
      v2 = rotl(v2, 32);
    };

    const auto* in = reinterpret_cast<const unsigned char*>(data.data());
    const std::size_t len = data.size();
    const std::size_t end = len - (len % 8);
    for (std::size_t off = 0; off < end; off += 8) {
      const std::uint64_t m = le64(in + off);
      v3 ^= m;
      sipround();
      sipround();
      v0 ^= m;
    }
    std::uint64_t b = static_cast<std::uint64_t>(len) << 56;
    for (std::size_t i = end; i < len; ++i)
      b |= static_cast<std::uint64_t>(in[i]) << (8 * (i - end));
    v3 ^= b;
    sipround();
    sipround();
    v0 ^= b;
    v2 ^= 0xff;
    sipround();
    sipround();
    sipround();
    sipround();
    return v0 ^ v1 ^ v2 ^ v3;
  }
};

inline std::string hex16(std::uint64_t v) {
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

// Unbiased bounded draw.
inline std::uint64_t bounded(std::uint64_t& state, std::uint64_t bound) {
  while (true) {
    const std::uint64_t x = splitmix64_next(state);
    const std::uint64_t r = x % bound;
    if (x - r <= ~std::uint64_t{0} - (bound - 1)) return r;
  }
}

inline std::set<std::string> extract_hashtags(std::string_view text) {
  std::set<std::string> tags;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '#') continue;
    std::size_t j = i + 1;
    std::string tag;
    while (j < text.size()) {
      const char c = text[j];
      if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
        tag.push_back(c);
      } else if (c >= 'A' && c <= 'Z') {
        tag.push_back(static_cast<char>(c - 'A' + 'a'));
      } else {
        break;
      }
      ++j;
    }
    if (!tag.empty()) tags.insert(tag);
    i = j - 1;
  }
  return tags;
}

}  // namespace store_detail

/// Stable sub-seed for a (run seed, salt) pair; sweep sample sizes use this
/// so their samples are independent yet reproducible.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t s = seed;
  const std::uint64_t a = store_detail::splitmix64_next(s);
  s = seed ^ (salt * 0xD1342543DE82EF95ULL + 0x632BE59BD9B4E019ULL);
  return a ^ store_detail::splitmix64_next(s);
}

/// Deterministic keyed one-way mapping of a handle to "u:" + 16 hex chars.
/// The handle is not recoverable from the output and never appears in it.
inline std::string pseudonymize(const std::string& handle, std::string_view key) {
  if (handle.empty()) throw Error(Errc::EmptyToken, "cannot pseudonymize an empty handle");
  if (key.size() < 16)
    throw Error(Errc::WeakKey, "pseudonymization key must be at least 16 bytes");
  const std::uint64_t h = store_detail::SipHash::hash(handle, key.substr(0, 16));
  return "u:" + store_detail::hex16(h);
}

/// One StandardEssay document per .txt file (doc_id = filename stem).
/// Unreadable files are recorded in the report and skipped.
inline std::vector<Document> ingest_essays(const std::filesystem::path& dir,
                                           const NormalizeConfig& cfg, const StopList& stops,
                                           IngestReport* report = nullptr) {
  namespace fs = std::filesystem;
  if (!fs::exists(dir)) throw Error(Errc::FileMissing, dir.string());
  if (!fs::is_directory(dir)) throw Error(Errc::FileMissing, dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".txt" && !entry.is_directory())
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error(Errc::EmptyDirectory, "no .txt files in " + dir.string());

  std::vector<Document> docs;
  for (const fs::path& file : files) {
    std::ifstream in(file, std::ios::binary);
    if (!in.is_open()) {
      if (report) report->file_errors.push_back("unreadable: " + file.string());
      continue;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
      if (report) report->file_errors.push_back("read error: " + file.string());
      continue;
    }
    Document doc;
    doc.doc_id = file.stem().string();
    doc.source = SourceKind::StandardEssay;
    doc.author = std::string(kStandardCorpusAuthor);
    doc.raw_text = std::move(text);
    doc.tokens = normalize_document(doc.raw_text, cfg, stops);
    docs.push_back(std::move(doc));
  }
  return docs;
}

/// Tweet replay ingestion: JSONL with {"id", "user", "text", "created_at"?}.
/// Authors are pseudonymized immediately; raw handles never leave this
/// function. Malformed lines and duplicate ids are counted and skipped.
inline std::pair<std::vector<Document>, std::vector<UserRecord>> ingest_tweets(
    const std::filesystem::path& jsonl_path, const NormalizeConfig& cfg, const StopList& stops,
    std::string_view key, IngestReport* report = nullptr) {
  std::ifstream in(jsonl_path, std::ios::binary);
  if (!in.is_open()) throw Error(Errc::FileMissing, jsonl_path.string());
  if (key.size() < 16)
    throw Error(Errc::WeakKey, "pseudonymization key must be at least 16 bytes");

  std::vector<Document> docs;
  std::map<std::string, std::vector<std::string>> user_docs;
  std::set<std::string> seen_ids;
  std::size_t total_lines = 0;
  std::size_t malformed = 0;
  std::size_t duplicates = 0;

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    ++total_lines;
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (!record.is_object() || !record.contains("id") || !record["id"].is_string() ||
        !record.contains("user") || !record["user"].is_string() || !record.contains("text") ||
        !record["text"].is_string()) {
      ++malformed;
      continue;
    }
    std::string id = record["id"].get<std::string>();
    if (id.empty()) {
      ++malformed;
      continue;
    }
    if (!seen_ids.insert(id).second) {
      ++duplicates;
      continue;
    }
    Document doc;
    doc.doc_id = std::move(id);
    doc.source = SourceKind::Tweet;
    doc.author = pseudonymize(record["user"].get<std::string>(), key);
    doc.raw_text = record["text"].get<std::string>();
    if (record.contains("created_at") && record["created_at"].is_string())
      doc.collected_at = record["created_at"].get<std::string>();
    doc.hashtags = store_detail::extract_hashtags(doc.raw_text);
    doc.tokens = normalize_document(doc.raw_text, cfg, stops);
    user_docs[doc.author].push_back(doc.doc_id);
    docs.push_back(std::move(doc));
  }
  if (report) {
    report->total_lines = total_lines;
    report->malformed_lines = malformed;
    report->duplicate_ids = duplicates;
  }
  if (docs.empty()) throw Error(Errc::AllLinesMalformed, "no valid records in " + jsonl_path.string());

  std::vector<UserRecord> users;
  users.reserve(user_docs.size());
  for (auto& [pseudonym, ids] : user_docs) {
    std::sort(ids.begin(), ids.end());
    users.push_back(UserRecord{pseudonym, std::move(ids)});
  }
  return {std::move(docs), std::move(users)};
}

/// Keeps tweets whose hashtag set intersects the seed set (the replay-file
/// analogue of collecting from those hashtags).
inline std::vector<Document> filter_by_seed_hashtags(std::span<const Document> docs,
                                                     const std::set<std::string>& seeds,
                                                     IngestReport* report = nullptr) {
  std::vector<Document> kept;
  for (const Document& doc : docs) {
    const bool match = std::any_of(doc.hashtags.begin(), doc.hashtags.end(),
                                   [&](const std::string& t) { return seeds.count(t) != 0; });
    if (match)
      kept.push_back(doc);
    else if (report)
      ++report->filtered_out;
  }
  return kept;
}

/// Uniform sample of n documents without replacement. Deterministic for a
/// given (doc set, n, seed): input order is normalized by doc_id first and
/// the draw uses a fixed portable generator.
inline std::vector<Document> subsample(std::span<const Document> docs, std::size_t n,
                                       std::uint64_t rng_seed) {
  std::vector<Document> pool(docs.begin(), docs.end());
  std::sort(pool.begin(), pool.end(),
            [](const Document& a, const Document& b) { return a.doc_id < b.doc_id; });
  if (n >= pool.size()) return pool;
  std::uint64_t state = rng_seed;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(store_detail::bounded(state, pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  std::sort(pool.begin(), pool.end(),
            [](const Document& a, const Document& b) { return a.doc_id < b.doc_id; });
  return pool;
}

// ---------------------------------------------------------------------------
// Snapshot: one JSON document, schema_version 1, keys in sorted order.
// raw_text is deliberately not persisted.
// ---------------------------------------------------------------------------

namespace store_detail {

inline nlohmann::json index_to_json(const CorpusIndex& index) {
  nlohmann::json stats = nlohmann::json::object();
  for (const auto& [term, s] : index.term_stats) {
    stats[term] = {{"collection_count", s.collection_count},
                   {"doc_freq", s.doc_freq},
                   {"per_user_count", s.per_user_count}};
  }
  return {{"doc_count", index.doc_count},
          {"term_stats", stats},
          {"doc_term_counts", index.doc_term_counts},
          {"doc_authors", index.doc_authors}};
}

inline CorpusIndex index_from_json(const nlohmann::json& j) {
  CorpusIndex index;
  index.doc_count = j.at("doc_count").get<std::int64_t>();
  for (const auto& [term, s] : j.at("term_stats").items()) {
    TermStats stats;
    stats.collection_count = s.at("collection_count").get<std::int64_t>();
    stats.doc_freq = s.at("doc_freq").get<std::int64_t>();
    stats.per_user_count = s.at("per_user_count").get<std::map<std::string, std::int64_t>>();
    index.term_stats.emplace(term, std::move(stats));
  }
  index.doc_term_counts =
      j.at("doc_term_counts").get<std::map<std::string, std::map<std::string, std::int64_t>>>();
  index.doc_authors = j.at("doc_authors").get<std::map<std::string, std::string>>();
  return index;
}

inline nlohmann::json document_to_json(const Document& doc) {
  nlohmann::json tokens = nlohmann::json::array();
  for (const Token& t : doc.tokens) {
    tokens.push_back({{"surface", t.surface},
                      {"stem", t.stem},
                      {"origin", t.origin == TokenOrigin::Hashtag ? "hashtag" : "word"}});
  }
  nlohmann::json j = {{"doc_id", doc.doc_id},
                      {"source", doc.source == SourceKind::Tweet ? "tweet" : "essay"},
                      {"author", doc.author},
                      {"hashtags", doc.hashtags},
                      {"tokens", std::move(tokens)}};
  if (doc.collected_at) j["collected_at"] = *doc.collected_at;
  return j;
}

inline Document document_from_json(const nlohmann::json& j) {
  Document doc;
  doc.doc_id = j.at("doc_id").get<std::string>();
  const std::string source = j.at("source").get<std::string>();
  if (source != "tweet" && source != "essay")
    throw Error(Errc::CorruptSnapshot, "unknown document source: " + source);
  doc.source = source == "tweet" ? SourceKind::Tweet : SourceKind::StandardEssay;
  doc.author = j.at("author").get<std::string>();
  doc.hashtags = j.at("hashtags").get<std::set<std::string>>();
  if (j.contains("collected_at")) doc.collected_at = j.at("collected_at").get<std::string>();
  for (const auto& t : j.at("tokens")) {
    const std::string origin = t.at("origin").get<std::string>();
    if (origin != "word" && origin != "hashtag")
      throw Error(Errc::CorruptSnapshot, "unknown token origin: " + origin);
    doc.tokens.push_back(Token{t.at("surface").get<std::string>(),
                               t.at("stem").get<std::string>(),
                               origin == "hashtag" ? TokenOrigin::Hashtag : TokenOrigin::Word});
  }
  return doc;
}

}  // namespace store_detail

inline constexpr std::int64_t kSnapshotSchemaVersion = 1;

inline void save_snapshot(const CorpusIndex& index, std::span<const Document> docs,
                          std::span<const UserRecord> users, const std::filesystem::path& path) {
  std::vector<const Document*> ordered;
  ordered.reserve(docs.size());
  for (const Document& d : docs) ordered.push_back(&d);
  std::sort(ordered.begin(), ordered.end(),
            [](const Document* a, const Document* b) { return a->doc_id < b->doc_id; });

  nlohmann::json docs_json = nlohmann::json::array();
  for (const Document* d : ordered) docs_json.push_back(store_detail::document_to_json(*d));

  std::vector<const UserRecord*> ordered_users;
  ordered_users.reserve(users.size());
  for (const UserRecord& u : users) ordered_users.push_back(&u);
  std::sort(ordered_users.begin(), ordered_users.end(),
            [](const UserRecord* a, const UserRecord* b) { return a->pseudonym < b->pseudonym; });

  nlohmann::json users_json = nlohmann::json::array();
  for (const UserRecord* u : ordered_users)
    users_json.push_back({{"pseudonym", u->pseudonym}, {"doc_ids", u->doc_ids}});

  const nlohmann::json snapshot = {{"schema_version", kSnapshotSchemaVersion},
                                   {"index", store_detail::index_to_json(index)},
                                   {"documents", std::move(docs_json)},
                                   {"users", std::move(users_json)}};

  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out.is_open()) throw Error(Errc::UnwritablePath, tmp.string());
    out << snapshot.dump(2) << '\n';
    if (!out.good()) throw Error(Errc::UnwritablePath, tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(Errc::UnwritablePath, path.string());
  }
}

struct Snapshot {
  CorpusIndex index;
  std::vector<Document> documents;
  std::vector<UserRecord> users;
};

inline Snapshot load_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw Error(Errc::FileMissing, path.string());
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("schema_version") ||
      !j["schema_version"].is_number_integer())
    throw Error(Errc::CorruptSnapshot, path.string());
  if (j["schema_version"].get<std::int64_t>() != kSnapshotSchemaVersion)
    throw Error(Errc::SchemaMismatch,
                "snapshot schema_version " + j["schema_version"].dump() + " unsupported");
  try {
    Snapshot snap;
    snap.index = store_detail::index_from_json(j.at("index"));
    for (const auto& d : j.at("documents"))
      snap.documents.push_back(store_detail::document_from_json(d));
    for (const auto& u : j.at("users"))
      snap.users.push_back(
          UserRecord{u.at("pseudonym").get<std::string>(),
                     u.at("doc_ids").get<std::vector<std::string>>()});
    return snap;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(Errc::CorruptSnapshot, path.string() + ": " + e.what());
  }
}

}  // namespace corpuscle

#endif  // CORPUSCLE_STORE_HPP
