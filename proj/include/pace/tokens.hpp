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

#ifndef PACE_TOKENS_HPP
#define PACE_TOKENS_HPP

#include <string>
#include <vector>

namespace pace {

// One token of a document. `index` is the ordinal position in the document's
// raw token sequence and is preserved when stopwords are filtered out.
struct Token {
  std::string surface;
  std::string normalized;
  bool is_stopword = false;
  int index = 0;
};

// Normalized token sequence; the currency of names, contexts and pattern
// slots.
using TokenSeq = std::vector<std::string>;

// Candidate noun-phrase span. Indices are positions in the *filtered* token
// stream, start inclusive, end exclusive.
struct ChunkSpan {
  int start = 0;
  int end = 0;

  int length() const { return end - start; }
  friend bool operator==(const ChunkSpan&, const ChunkSpan&) = default;
};

// Separators reserved for canonical keys. Tokens can never contain these
// (the tokenizer splits on whitespace and control characters never survive).
inline constexpr char kTokenSep = '\x1f';
inline constexpr char kFieldSep = '\x1e';

std::string join_tokens(const TokenSeq& tokens, char sep = kTokenSep);

// Human-readable form, tokens joined with single spaces.
std::string display_tokens(const TokenSeq& tokens);

}  // namespace pace

#endif  // PACE_TOKENS_HPP
