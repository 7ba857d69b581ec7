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

#ifndef CORPUSCLE_ERRORS_HPP
#define CORPUSCLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace corpuscle {

enum class Errc {
  FileMissing,
  FileUnreadable,
  EmptyList,
  EmptyToken,
  EmptyDirectory,
  DuplicateDocId,
  UnknownTerm,
  EmptyCorpus,
  AllLinesMalformed,
  WeakKey,
  SchemaMismatch,
  CorruptSnapshot,
  ModeMismatch,
  EmptyAlignment,
  DegenerateVector,
  NoUserDocuments,
  UnwritablePath,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::FileMissing: return "FileMissing";
    case Errc::FileUnreadable: return "FileUnreadable";
    case Errc::EmptyList: return "EmptyList";
    case Errc::EmptyToken: return "EmptyToken";
    case Errc::EmptyDirectory: return "EmptyDirectory";
    case Errc::DuplicateDocId: return "DuplicateDocId";
    case Errc::UnknownTerm: return "UnknownTerm";
    case Errc::EmptyCorpus: return "EmptyCorpus";
    case Errc::AllLinesMalformed: return "AllLinesMalformed";
    case Errc::WeakKey: return "WeakKey";
    case Errc::SchemaMismatch: return "SchemaMismatch";
    case Errc::CorruptSnapshot: return "CorruptSnapshot";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::EmptyAlignment: return "EmptyAlignment";
    case Errc::DegenerateVector: return "DegenerateVector";
    case Errc::NoUserDocuments: return "NoUserDocuments";
    case Errc::UnwritablePath: return "UnwritablePath";
  }
  return "Unknown";
}

/// Library-wide exception type carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace corpuscle

#endif  // CORPUSCLE_ERRORS_HPP
