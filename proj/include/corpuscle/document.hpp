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

#ifndef CORPUSCLE_DOCUMENT_HPP
#define CORPUSCLE_DOCUMENT_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "corpuscle/normalize.hpp"

namespace corpuscle {

enum class SourceKind { StandardEssay, Tweet };

/// Reserved pseudonym that standard-corpus essays attribute their term
/// contributions to.
inline constexpr std::string_view kStandardCorpusAuthor = "corpus:standard";

/// One text unit (essay or tweet). `raw_text` is in-memory only and is never
/// written to snapshots or reports.
struct Document {
  std::string doc_id;
  SourceKind source = SourceKind::StandardEssay;
  std::string author;
  std::string raw_text;
  std::vector<Token> tokens;
  std::set<std::string> hashtags;               // Tweet only; empty for essays
  std::optional<std::string> collected_at;      // RFC-3339, as supplied

  bool operator==(const Document&) const = default;
};

struct UserRecord {
  std::string pseudonym;
  std::vector<std::string> doc_ids;

  bool operator==(const UserRecord&) const = default;
};

}  // namespace corpuscle

#endif  // CORPUSCLE_DOCUMENT_HPP
