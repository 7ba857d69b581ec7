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

#ifndef CORPUSCLE_TERM_VECTOR_HPP
#define CORPUSCLE_TERM_VECTOR_HPP

#include <map>
#include <string>

namespace corpuscle {

enum class WeightingMode { RawCount, RelFreq, TfIdf };

inline const char* weighting_name(WeightingMode mode) {
  switch (mode) {
    case WeightingMode::RawCount: return "raw";
    case WeightingMode::RelFreq: return "relfreq";
    case WeightingMode::TfIdf: return "tfidf";
  }
  return "raw";
}

/// Sparse term -> weight map. Ordered so that every iteration over a vector
/// is deterministic.
struct TermVector {
  std::map<std::string, double> entries;
  WeightingMode mode = WeightingMode::RawCount;

  bool operator==(const TermVector&) const = default;
};

}  // namespace corpuscle

#endif  // CORPUSCLE_TERM_VECTOR_HPP
