// Copyright 2026 The PACE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PACE_TEXT_HPP
#define PACE_TEXT_HPP

#include <set>
#include <string>
#include <vector>

#include "pace/tokens.hpp"

namespace pace {

// Stopwords are matched against the lowercased surface form. Punctuation-only
// tokens are treated as stopwords independently of the list.
class Stoplist {
 public:
  // The list shipped with the binary (mirrors data/stopwords.txt).
  static Stoplist builtin();

  // One token per line, UTF-8, '#' starts a comment. Throws std::runtime_error
  // if the file cannot be read.
  static Stoplist from_file(const std::string& path);

  static Stoplist from_words(const std::vector<std::string>& words);

  bool contains(const std::string& lowercased) const {
    return words_.count(lowercased) > 0;
  }
  size_t size() const { return words_.size(); }

 private:
  std::set<std::string> words_;
};

// Tokenization, normalization, filtering and chunking. All methods are pure
// functions of the pipeline configuration and their inputs.
class TextPipeline {
 public:
  explicit TextPipeline(Stoplist stoplist = Stoplist::builtin(),
                        int max_chunk_tokens = 10);

  // Lowercase then Porter-stem, iterated to a fixpoint so that normalizing an
  // already-normalized form is the identity.
  std::string normalize(const std::string& surface) const;

  // Split on whitespace; leading and trailing punctuation characters become
  // standalone tokens; intra-word punctuation (hyphens, dots) is preserved.
  // Punctuation tokens and stoplist words are flagged as stopwords.
  std::vector<Token> tokenize(const std::string& text) const;

  // Subsequence with stopword tokens removed; original indices preserved.
  std::vector<Token> filtered_stream(const std::vector<Token>& tokens) const;

  // Maximal runs of chunk-eligible tokens, greedily split at the length cap.
  // Spans index into the filtered stream. Closed-class words (prepositions,
  // conjunctions, modals, wh-words) and verbs of attribution break runs.
  std::vector<ChunkSpan> chunk(const std::vector<Token>& filtered) const;

  // tokenize + filtered_stream in one call.
  std::vector<Token> analyze(const std::string& text) const;

  // Normalized, filtered token sequence of a raw phrase. Used when loading
  // seed text.
  TokenSeq normalize_phrase(const std::string& text) const;

  const Stoplist& stoplist() const { return stoplist_; }
  int max_chunk_tokens() const { return max_chunk_tokens_; }

 private:
  bool chunk_blocked(const std::string& normalized) const;

  Stoplist stoplist_;
  std::set<std::string> chunk_blockers_;  // normalized forms
  int max_chunk_tokens_;
};

}  // namespace pace

#endif  // PACE_TEXT_HPP
