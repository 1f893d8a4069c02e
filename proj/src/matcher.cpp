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

#include "pace/matcher.hpp"

#include <algorithm>

namespace pace {
namespace {

std::string surface_of_range(const std::vector<Token>& tokens, int begin,
                             int end) {
  std::string out;
  for (int i = begin; i < end; ++i) {
    if (i > begin) out.push_back(' ');
    out += tokens[i].surface;
  }
  return out;
}

TokenSeq normalized_of_range(const std::vector<Token>& tokens, int begin,
                             int end) {
  TokenSeq out;
  out.reserve(static_cast<size_t>(end - begin));
  for (int i = begin; i < end; ++i) out.push_back(tokens[i].normalized);
  return out;
}

struct RawMatch {
  EntityContextPair pair;
  std::string pattern_key;
};

std::string type_of_pattern_key(const std::string& key) {
  return key.substr(0, key.find(kFieldSep));
}

}  // namespace

bool slots_context_match(const Pattern& pattern,
                         const std::vector<Token>& tokens, ChunkSpan chunk) {
  const TokenSeq& pre = pattern.prefix_slot();
  const TokenSeq& suf = pattern.suffix_slot();
  int n = static_cast<int>(tokens.size());
  int k = static_cast<int>(pre.size());
  int m = static_cast<int>(suf.size());
  if (chunk.start < k || chunk.end + m > n) return false;
  for (int t = 0; t < k; ++t) {
    if (tokens[chunk.start - k + t].normalized != pre[t]) return false;
  }
  for (int t = 0; t < m; ++t) {
    if (tokens[chunk.end + t].normalized != suf[t]) return false;
  }
  return true;
}

bool name_slot_contained(const Pattern& pattern,
                         const std::vector<Token>& tokens, ChunkSpan chunk) {
  const TokenSeq& name = pattern.name_slot();
  if (name.empty()) return true;
  int q = static_cast<int>(name.size());
  for (int s = chunk.start; s + q <= chunk.end; ++s) {
    bool ok = true;
    for (int t = 0; t < q; ++t) {
      if (tokens[s + t].normalized != name[t]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool pattern_matches_chunk(const Pattern& pattern,
                           const std::vector<Token>& tokens, ChunkSpan chunk) {
  return slots_context_match(pattern, tokens, chunk) &&
         name_slot_contained(pattern, tokens, chunk);
}

std::vector<CandidatePair> match_pattern(const Pattern& pattern,
                                         const Document& doc, int radius) {
  std::vector<CandidatePair> out;
  int n = static_cast<int>(doc.tokens.size());
  for (ChunkSpan chunk : doc.chunks) {
    if (!pattern_matches_chunk(pattern, doc.tokens, chunk)) continue;
    int pre_begin = std::max(0, chunk.start - radius);
    int suf_end = std::min(n, chunk.end + radius);

    CandidatePair cand;
    cand.pair.entity_type = pattern.entity_type();
    cand.pair.name = normalized_of_range(doc.tokens, chunk.start, chunk.end);
    cand.pair.prefix = normalized_of_range(doc.tokens, pre_begin, chunk.start);
    cand.pair.suffix = normalized_of_range(doc.tokens, chunk.end, suf_end);
    cand.pair.name_surface =
        surface_of_range(doc.tokens, chunk.start, chunk.end);
    cand.pair.prefix_surface =
        surface_of_range(doc.tokens, pre_begin, chunk.start);
    cand.pair.suffix_surface = surface_of_range(doc.tokens, chunk.end, suf_end);
    cand.pair.source = doc.id;
    cand.nominated_by.insert(pattern.key());
    out.push_back(std::move(cand));
  }
  return out;
}

Document pair_as_micro_doc(const EntityContextPair& pair) {
  Document doc;
  doc.id = pair.source;
  auto push = [&](const TokenSeq& seq) {
    for (const std::string& t : seq) {
      Token tok;
      tok.surface = t;
      tok.normalized = t;
      tok.index = static_cast<int>(doc.tokens.size());
      doc.tokens.push_back(std::move(tok));
    }
  };
  push(pair.prefix);
  push(pair.name);
  push(pair.suffix);
  int start = static_cast<int>(pair.prefix.size());
  doc.chunks.push_back({start, start + static_cast<int>(pair.name.size())});
  return doc;
}

bool pattern_matches_pair(const Pattern& pattern,
                          const EntityContextPair& pair) {
  Document micro = pair_as_micro_doc(pair);
  return pattern_matches_chunk(pattern, micro.tokens, micro.chunks.front());
}

FindResult find_candidates(const KnowledgeState& state, CorpusStore& corpus,
                           int radius, int jobs) {
  // Snapshot the patterns in canonical order; state is read-only during the
  // scan so documents can be processed concurrently.
  std::vector<const Pattern*> patterns;
  for (const auto& [type, knowledge] : state.by_type) {
    for (const auto& [key, pattern] : knowledge.patterns)
      patterns.push_back(&pattern);
  }

  auto visit = [&](const Document& doc) {
    std::vector<RawMatch> matches;
    for (const Pattern* p : patterns) {
      for (CandidatePair& c : match_pattern(*p, doc, radius)) {
        matches.push_back({std::move(c.pair), p->key()});
      }
    }
    return matches;
  };
  std::vector<std::vector<RawMatch>> per_doc =
      corpus.map_docs<std::vector<RawMatch>>(visit, jobs);

  // Aggregate in document-id order (map_docs already canonicalized it).
  FindResult result;
  std::map<std::string, std::map<std::string, CandidatePair>> merged;
  std::map<std::string, std::set<std::string>> known_names;
  for (const auto& [type, knowledge] : state.by_type)
    known_names[type] = knowledge.known_name_keys();

  for (const auto& doc_matches : per_doc) {
    for (const RawMatch& m : doc_matches) {
      const std::string& type = m.pair.entity_type;
      const std::string name_key = m.pair.name_key();
      if (known_names[type].count(name_key) > 0) {
        result.known_name_matches[m.pattern_key].insert(name_key);
      }
      auto type_it = state.by_type.find(type);
      if (type_it != state.by_type.end() &&
          type_it->second.pairs.count(m.pair.key()) > 0) {
        continue;  // already known
      }
      auto [it, inserted] = merged[type].emplace(m.pair.key(), CandidatePair{});
      if (inserted) it->second.pair = m.pair;
      it->second.nominated_by.insert(m.pattern_key);
    }
  }
  for (auto& [type, by_key] : merged) {
    auto& out = result.candidates_by_type[type];
    out.reserve(by_key.size());
    for (auto& [key, cand] : by_key) out.push_back(std::move(cand));
  }
  return result;
}

std::map<std::string, std::vector<std::string>> apply_known_name_matches(
    KnowledgeState& state, const FindResult& result) {
  std::map<std::string, std::vector<std::string>> deltas;
  for (const auto& [pattern_key, names] : result.known_name_matches) {
    Pattern* p =
        state.find_pattern(type_of_pattern_key(pattern_key), pattern_key);
    if (p == nullptr) continue;
    for (const std::string& name_key : names) {
      if (p->matched_names().count(name_key) == 0) {
        p->record_matched_name(name_key);
        deltas[pattern_key].push_back(name_key);
      }
    }
  }
  return deltas;
}

}  // namespace pace
