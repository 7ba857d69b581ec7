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

#ifndef CORPUSCLE_NORMALIZE_HPP
#define CORPUSCLE_NORMALIZE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "corpuscle/lexicon.hpp"
#include "corpuscle/porter.hpp"

namespace corpuscle {

enum class TokenOrigin { Word, Hashtag };

/// One countable unit of text. `stem` equals `surface` unless stemming was
/// applied by normalize_document.
struct Token {
  std::string surface;
  std::string stem;
  TokenOrigin origin = TokenOrigin::Word;

  bool operator==(const Token&) const = default;
};

struct NormalizeConfig {
  bool stemming_enabled = false;
  bool keep_hashtag_tokens = true;
  std::size_t min_token_length = 2;
};

namespace normalize_detail {

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

// Decodes one UTF-8 codepoint starting at i and advances i past it. Invalid
// bytes decode as U+FFFD and advance by one.
inline char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto byte = [&](std::size_t j) { return static_cast<std::uint8_t>(s[j]); };
  const std::uint8_t b0 = byte(i);
  if (b0 < 0x80) {
    i += 1;
    return b0;
  }
  auto cont = [&](std::size_t j) { return j < s.size() && (byte(j) & 0xC0) == 0x80; };
  if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
    char32_t cp = static_cast<char32_t>((b0 & 0x1F) << 6 | (byte(i + 1) & 0x3F));
    i += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
    char32_t cp = static_cast<char32_t>((b0 & 0x0F) << 12 | (byte(i + 1) & 0x3F) << 6 |
                                        (byte(i + 2) & 0x3F));
    i += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
    char32_t cp = static_cast<char32_t>((b0 & 0x07) << 18 | (byte(i + 1) & 0x3F) << 12 |
                                        (byte(i + 2) & 0x3F) << 6 | (byte(i + 3) & 0x3F));
    i += 4;
    return cp;
  }
  i += 1;
  return 0xFFFD;
}

// Latin letters beyond ASCII are kept as letters; everything else non-ASCII
// (emoji, symbols, CJK) splits tokens. English-only corpus, so this is the
// whole Unicode story.
inline bool is_latin_letter_cp(char32_t cp) {
  return cp >= 0x00C0 && cp <= 0x024F && cp != 0x00D7 && cp != 0x00F7;
}

inline char32_t fold_latin_cp(char32_t cp) {
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
  return cp;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline bool chunk_is_url(std::string_view chunk) {
  if (chunk.find("://") != std::string_view::npos) return true;
  if (chunk.size() >= 4) {
    return ascii_lower(chunk[0]) == 'w' && ascii_lower(chunk[1]) == 'w' &&
           ascii_lower(chunk[2]) == 'w' && chunk[3] == '.';
  }
  return false;
}

class ChunkScanner {
 public:
  ChunkScanner(const NormalizeConfig& cfg, std::vector<Token>& out) : cfg_(cfg), out_(out) {}

  void scan(std::string_view chunk) {
    std::size_t i = 0;
    while (i < chunk.size()) {
      const char c = chunk[i];
      if (c == '#') {
        flush();
        ++i;
        while (i < chunk.size() && chunk[i] == '#') ++i;
        origin_ = TokenOrigin::Hashtag;
        continue;
      }
      if (c == '@') {
        flush();
        ++i;
        while (i < chunk.size() &&
               (is_ascii_alpha(chunk[i]) || is_ascii_digit(chunk[i]) || chunk[i] == '_'))
          ++i;
        continue;
      }
      if (is_ascii_alpha(c)) {
        cur_.push_back(ascii_lower(c));
        all_digits_ = false;
        ++i;
        continue;
      }
      if (is_ascii_digit(c)) {
        cur_.push_back(c);
        ++i;
        continue;
      }
      if (c == '\'') {  // apostrophes vanish in-word
        ++i;
        continue;
      }
      if (static_cast<std::uint8_t>(c) < 0x80) {  // any other ASCII splits
        flush();
        ++i;
        continue;
      }
      const char32_t cp = decode_utf8(chunk, i);
      if (cp == 0x2019) continue;  // typographic apostrophe
      if (is_latin_letter_cp(cp)) {
        append_utf8(cur_, fold_latin_cp(cp));
        all_digits_ = false;
      } else {
        flush();
      }
    }
    flush();
  }

 private:
  void flush() {
    if (!cur_.empty() && !all_digits_ && cur_.size() >= cfg_.min_token_length &&
        (origin_ != TokenOrigin::Hashtag || cfg_.keep_hashtag_tokens)) {
      out_.push_back(Token{cur_, cur_, origin_});
    }
    cur_.clear();
    all_digits_ = true;
    origin_ = TokenOrigin::Word;
  }

  const NormalizeConfig& cfg_;
  std::vector<Token>& out_;
  std::string cur_;
  bool all_digits_ = true;
  TokenOrigin origin_ = TokenOrigin::Word;
};

}  // namespace normalize_detail

/// Raw text -> ordered clean tokens. URLs and @mentions are dropped,
/// #tags become Hashtag tokens, letters are case-folded, apostrophes are
/// deleted in-word, remaining punctuation splits, digit-only and too-short
/// tokens are dropped.
inline std::vector<Token> tokenize(std::string_view raw_text, const NormalizeConfig& cfg) {
  using namespace normalize_detail;
  std::vector<Token> tokens;
  ChunkScanner scanner(cfg, tokens);
  std::size_t pos = 0;
  while (pos < raw_text.size()) {
    while (pos < raw_text.size() && is_ascii_space(raw_text[pos])) ++pos;
    std::size_t end = pos;
    while (end < raw_text.size() && !is_ascii_space(raw_text[end])) ++end;
    if (end > pos) {
      std::string_view chunk = raw_text.substr(pos, end - pos);
      if (!chunk_is_url(chunk)) scanner.scan(chunk);
    }
    pos = end;
  }
  return tokens;
}

/// tokenize, then stop-word filter, then stem the survivors when enabled.
inline std::vector<Token> normalize_document(std::string_view raw_text,
                                             const NormalizeConfig& cfg,
                                             const StopList& stops) {
  std::vector<Token> tokens = tokenize(raw_text, cfg);
  std::erase_if(tokens, [&](const Token& t) { return stops.contains(t.surface); });
  if (cfg.stemming_enabled) {
    for (Token& t : tokens) t.stem = porter_stem(t.surface);
  }
  return tokens;
}

}  // namespace corpuscle

#endif  // CORPUSCLE_NORMALIZE_HPP
