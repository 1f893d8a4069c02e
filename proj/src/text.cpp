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

#include "pace/text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pace/porter.hpp"
#include "stopwords_data.hpp"

namespace pace {
namespace {

bool is_space_byte(unsigned char c) { return std::isspace(c) != 0; }

// ASCII punctuation. Non-ASCII bytes are treated as word characters, which
// keeps UTF-8 sequences intact.
bool is_punct_byte(unsigned char c) {
  return c < 0x80 && std::ispunct(c) != 0;
}

bool punctuation_only(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s)
    if (!is_punct_byte(c)) return false;
  return true;
}

std::string to_lower(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> parse_word_list(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r\n");
    words.push_back(line.substr(b, e - b + 1));
  }
  return words;
}

// Closed-class words that terminate chunk runs but survive stopword
// filtering: prepositions, conjunctions, modals, wh-words, plus common verbs
// of attribution. Stored here as raw words; normalized at pipeline
// construction so inflected forms in text are covered via their stems.
const char* const kChunkBlockers[] = {
    // prepositions ("for" is deliberately absent: names like "exploitable
    // for remote code execution" must remain chunkable; "to" is here rather
    // than in the stoplist so that contexts like "allow attackers to" end at
    // a chunk boundary)
    "to", "in", "on", "at", "of", "by", "from", "with", "within", "without",
    "into", "onto", "upon", "over", "under", "between", "among", "amongst",
    "through", "during", "before", "after", "above", "below", "against",
    "toward", "towards", "across", "behind", "beyond", "near", "via", "per",
    "amid", "despite", "about", "inside", "outside", "along", "beneath",
    "underneath", "atop", "besides", "except",
    // conjunctions
    "and", "or", "but", "nor", "so", "yet", "than", "because", "although",
    "though", "unless", "until", "while", "since", "whereas", "whether",
    // modals
    "can", "could", "may", "might", "shall", "should", "will", "would",
    "must",
    // wh-words
    "which", "who", "whom", "whose", "what", "when", "where", "how", "why",
    // verbs of attribution
    "say", "says", "said", "tell", "told", "report", "reported", "according",
    "announced", "claimed", "warned", "wrote", "writes", "added", "add",
    "explained", "described", "mentioned", "confirmed",
};

}  // namespace

std::string join_tokens(const TokenSeq& tokens, char sep) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(sep);
    out += tokens[i];
  }
  return out;
}

std::string display_tokens(const TokenSeq& tokens) {
  return join_tokens(tokens, ' ');
}

Stoplist Stoplist::builtin() {
  std::istringstream in(kDefaultStopwordsFile);
  return from_words(parse_word_list(in));
}

Stoplist Stoplist::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read stopword file: " + path);
  return from_words(parse_word_list(in));
}

Stoplist Stoplist::from_words(const std::vector<std::string>& words) {
  Stoplist list;
  for (const auto& w : words) list.words_.insert(to_lower(w));
  return list;
}

TextPipeline::TextPipeline(Stoplist stoplist, int max_chunk_tokens)
    : stoplist_(std::move(stoplist)), max_chunk_tokens_(max_chunk_tokens) {
  for (const char* w : kChunkBlockers) chunk_blockers_.insert(normalize(w));
}

std::string TextPipeline::normalize(const std::string& surface) const {
  std::string w = to_lower(surface);
  // Iterate to a fixpoint: a single Porter pass occasionally leaves a form
  // that a further pass would still shorten (e.g. "agreed" -> "agre" ->
  // "agr"), and stored knowledge must be stable under re-normalization.
  for (int i = 0; i < 8; ++i) {
    std::string next = porter_stem(w);
    if (next == w) break;
    w = std::move(next);
  }
  return w;
}

std::vector<Token> TextPipeline::tokenize(const std::string& text) const {
  std::vector<Token> out;
  auto emit = [&](std::string surface) {
    Token t;
    t.index = static_cast<int>(out.size());
    bool punct = punctuation_only(surface);
    std::string lowered = to_lower(surface);
    t.is_stopword = punct || stoplist_.contains(lowered);
    t.normalized = punct ? std::move(lowered) : normalize(surface);
    t.surface = std::move(surface);
    out.push_back(std::move(t));
  };

  size_t i = 0;
  size_t n = text.size();
  while (i < n) {
    while (i < n && is_space_byte(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= n) break;
    size_t j = i;
    while (j < n && !is_space_byte(static_cast<unsigned char>(text[j]))) ++j;
    std::string word = text.substr(i, j - i);
    i = j;

    // Peel leading punctuation characters into their own tokens.
    size_t b = 0;
    while (b < word.size() &&
           is_punct_byte(static_cast<unsigned char>(word[b]))) {
      emit(word.substr(b, 1));
      ++b;
    }
    // Find the core, leaving trailing punctuation for later.
    size_t e = word.size();
    while (e > b && is_punct_byte(static_cast<unsigned char>(word[e - 1])))
      --e;
    if (e > b) emit(word.substr(b, e - b));
    for (size_t k = e; k < word.size(); ++k) emit(word.substr(k, 1));
  }
  return out;
}

std::vector<Token> TextPipeline::filtered_stream(
    const std::vector<Token>& tokens) const {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens)
    if (!t.is_stopword) out.push_back(t);
  return out;
}

bool TextPipeline::chunk_blocked(const std::string& normalized) const {
  return chunk_blockers_.count(normalized) > 0;
}

std::vector<ChunkSpan> TextPipeline::chunk(
    const std::vector<Token>& filtered) const {
  std::vector<ChunkSpan> spans;
  int n = static_cast<int>(filtered.size());
  int i = 0;
  while (i < n) {
    if (chunk_blocked(filtered[i].normalized)) {
      ++i;
      continue;
    }
    int j = i;
    while (j < n && !chunk_blocked(filtered[j].normalized)) ++j;
    // Greedy split of the run at the cap; errs in favor of longer spans.
    for (int s = i; s < j; s += max_chunk_tokens_) {
      spans.push_back({s, std::min(j, s + max_chunk_tokens_)});
    }
    i = j;
  }
  return spans;
}

std::vector<Token> TextPipeline::analyze(const std::string& text) const {
  return filtered_stream(tokenize(text));
}

TokenSeq TextPipeline::normalize_phrase(const std::string& text) const {
  TokenSeq out;
  for (const Token& t : analyze(text)) out.push_back(t.normalized);
  return out;
}

}  // namespace pace
