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

#include "pace/nominator.hpp"

#include <algorithm>
#include <stdexcept>

namespace pace {
namespace {

// Longest common suffix, matching rightmost tokens first and growing
// outward.
TokenSeq common_token_suffix(const TokenSeq& a, const TokenSeq& b) {
  size_t n = std::min(a.size(), b.size());
  size_t k = 0;
  while (k < n && a[a.size() - 1 - k] == b[b.size() - 1 - k]) ++k;
  return TokenSeq(a.end() - static_cast<ptrdiff_t>(k), a.end());
}

// Longest common prefix, leftmost tokens first.
TokenSeq common_token_prefix(const TokenSeq& a, const TokenSeq& b) {
  size_t n = std::min(a.size(), b.size());
  size_t k = 0;
  while (k < n && a[k] == b[k]) ++k;
  return TokenSeq(a.begin(), a.begin() + static_cast<ptrdiff_t>(k));
}

}  // namespace

std::optional<CandidatePattern> nominate_pattern(const EntityContextPair& a,
                                                 const EntityContextPair& b) {
  if (a.entity_type != b.entity_type) {
    throw std::invalid_argument("nominate_pattern: entity type mismatch: " +
                                a.entity_type + " vs " + b.entity_type);
  }
  TokenSeq prefix = common_token_suffix(a.prefix, b.prefix);
  TokenSeq suffix = common_token_prefix(a.suffix, b.suffix);
  TokenSeq name = common_token_suffix(a.name, b.name);
  if (prefix.empty() && suffix.empty() && name.empty()) return std::nullopt;

  CandidatePattern cand{Pattern::make(a.entity_type, std::move(prefix),
                                      std::move(name), std::move(suffix)),
                        {a.key(), b.key()},
                        0.0};
  return cand;
}

std::map<std::string, std::vector<CandidatePattern>> nominate_all(
    const KnowledgeState& state, bool same_doc_filter) {
  std::map<std::string, std::vector<CandidatePattern>> out;
  for (const auto& [type, knowledge] : state.by_type) {
    std::vector<const EntityContextPair*> pairs;
    pairs.reserve(knowledge.pairs.size());
    for (const auto& [key, pair] : knowledge.pairs) pairs.push_back(&pair);

    std::map<std::string, CandidatePattern> by_key;
    for (size_t i = 0; i < pairs.size(); ++i) {
      for (size_t j = i; j < pairs.size(); ++j) {
        if (same_doc_filter && pairs[i]->source == pairs[j]->source) continue;
        auto cand = nominate_pattern(*pairs[i], *pairs[j]);
        if (!cand.has_value()) continue;
        std::string key = cand->pattern.key();
        if (knowledge.patterns.count(key) > 0) continue;  // already known
        auto it = by_key.find(key);
        if (it == by_key.end()) {
          by_key.emplace(std::move(key), std::move(*cand));
        } else {
          it->second.parents.insert(cand->parents.begin(),
                                    cand->parents.end());
        }
      }
    }
    if (by_key.empty()) continue;
    auto& list = out[type];
    list.reserve(by_key.size());
    for (auto& [key, cand] : by_key) list.push_back(std::move(cand));
  }
  return out;
}

}  // namespace pace
