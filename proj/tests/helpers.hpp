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

#ifndef PACE_TESTS_HELPERS_HPP
#define PACE_TESTS_HELPERS_HPP

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pace/domain.hpp"
#include "pace/matcher.hpp"
#include "pace/nominator.hpp"

namespace pace::testing {

// "a b c" -> {"a", "b", "c"}; tokens are used as-is (already normalized).
inline TokenSeq toks(const std::string& spaced) {
  TokenSeq out;
  std::istringstream in(spaced);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline EntityContextPair make_pair_of(const std::string& type,
                                      const std::string& name,
                                      const std::string& prefix = "",
                                      const std::string& suffix = "",
                                      const std::string& source = kSeedSource,
                                      int learned_at = 0) {
  EntityContextPair p;
  p.entity_type = type;
  p.name = toks(name);
  p.prefix = toks(prefix);
  p.suffix = toks(suffix);
  p.name_surface = name;
  p.prefix_surface = prefix;
  p.suffix_surface = suffix;
  p.source = source;
  p.learned_at = learned_at;
  return p;
}

inline Pattern make_pattern_of(const std::string& type,
                               const std::string& prefix,
                               const std::string& name,
                               const std::string& suffix,
                               const std::string& origin = "learned") {
  return Pattern::make(type, toks(prefix), toks(name), toks(suffix), origin);
}

// Document built directly from normalized tokens: chunks are runs separated
// by the "/" token, which is dropped. "a b / c" -> tokens [a b c], chunks
// [0,2) [2,3).
inline Document make_doc_of(const std::string& id,
                            const std::string& chunked_tokens) {
  Document doc;
  doc.id = id;
  std::istringstream in(chunked_tokens);
  std::string t;
  int run_start = 0;
  bool in_run = false;
  while (in >> t) {
    if (t == "/") {
      if (in_run)
        doc.chunks.push_back({run_start, static_cast<int>(doc.tokens.size())});
      in_run = false;
      continue;
    }
    if (!in_run) {
      run_start = static_cast<int>(doc.tokens.size());
      in_run = true;
    }
    Token tok;
    tok.surface = t;
    tok.normalized = t;
    tok.index = static_cast<int>(doc.tokens.size());
    doc.tokens.push_back(std::move(tok));
  }
  if (in_run)
    doc.chunks.push_back({run_start, static_cast<int>(doc.tokens.size())});
  return doc;
}

// Deterministic word generator over a tiny vocabulary, for fuzzing.
class WordGen {
 public:
  explicit WordGen(unsigned seed, int vocabulary = 12) : rng_(seed) {
    static const char* kWords[] = {
        "allow", "attack", "inject", "code",  "flaw",  "bug",   "remot",
        "execut", "window", "android", "php",  "worm",  "kernel", "server",
        "patch", "overflow", "heap",  "stack", "root",  "shell",
    };
    int n = std::min<int>(vocabulary, 20);
    for (int i = 0; i < n; ++i) vocab_.push_back(kWords[i]);
  }

  std::string word() { return vocab_[pick(vocab_.size())]; }

  TokenSeq seq(int min_len, int max_len) {
    int len = min_len + static_cast<int>(pick(max_len - min_len + 1));
    TokenSeq out;
    for (int i = 0; i < len; ++i) out.push_back(word());
    return out;
  }

  size_t pick(size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng_);
  }
  double real() { return std::uniform_real_distribution<>(0.0, 1.0)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  std::vector<std::string> vocab_;
};

// Canonical rendering of a FindResult in the oracle's format so the two can
// be compared as strings.
inline std::string serialize_candidates(
    const std::map<std::string, std::vector<CandidatePair>>& by_type) {
  auto spaced = [](const TokenSeq& seq) {
    std::string out = " ";
    for (const auto& t : seq) out += t + " ";
    return out;
  };
  std::map<std::string, std::string> lines;  // keyed like the oracle
  for (const auto& [type, cands] : by_type) {
    for (const CandidatePair& c : cands) {
      std::string key = type + "|" + spaced(c.pair.prefix) + "|" +
                        spaced(c.pair.name) + "|" + spaced(c.pair.suffix);
      std::string line = type + " |" + spaced(c.pair.prefix) + "|" +
                         spaced(c.pair.name) + "|" + spaced(c.pair.suffix) +
                         "| src=" + c.pair.source + " by=";
      for (const auto& p : c.nominated_by) line += "<" + p + ">";
      lines.emplace(std::move(key), std::move(line));
    }
  }
  std::string out;
  for (const auto& [key, line] : lines) out += line + "\n";
  return out;
}

// A joined name key rendered as the oracle's spaced text form.
inline std::string spaced_from_key(const std::string& name_key) {
  std::string out = " ";
  std::string cur;
  for (char ch : name_key) {
    if (ch == kTokenSep) {
      out += cur + " ";
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out += cur + " ";
  return out;
}

inline std::string serialize_known_matches(
    const std::map<std::string, std::set<std::string>>& matches) {
  std::string out = "--known--\n";
  for (const auto& [pkey, names] : matches) {
    out += "<" + pkey + ">:";
    std::set<std::string> rendered;
    for (const auto& n : names) rendered.insert(spaced_from_key(n));
    for (const auto& n : rendered) out += "[" + n + "]";
    out += "\n";
  }
  return out;
}

}  // namespace pace::testing

#endif  // PACE_TESTS_HELPERS_HPP
