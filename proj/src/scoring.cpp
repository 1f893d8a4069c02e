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

#include "pace/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pace {
namespace {

std::string type_of_key(const std::string& key) {
  return key.substr(0, key.find(kFieldSep));
}

void pattern_counts(const Pattern& pattern,
                    const std::vector<const EntityContextPair*>& known_pairs,
                    int* n_with_name, int* n_total) {
  int big_n = 0;
  int small_n = 0;
  for (const EntityContextPair* pair : known_pairs) {
    Document micro = pair_as_micro_doc(*pair);
    if (!slots_context_match(pattern, micro.tokens, micro.chunks.front()))
      continue;
    ++big_n;
    if (name_slot_contained(pattern, micro.tokens, micro.chunks.front()))
      ++small_n;
  }
  *n_with_name = small_n;
  *n_total = big_n;
}

}  // namespace

PatternResolver resolver_for(const KnowledgeState& state) {
  return [&state](const std::string& key) {
    return state.find_pattern(type_of_key(key), key);
  };
}

double basilisk_entity_rank(const std::set<std::string>& nominated_by,
                            const PatternResolver& resolve) {
  if (nominated_by.empty()) {
    throw std::invalid_argument("candidate has no nominating patterns");
  }
  double sum = 0.0;
  for (const std::string& key : nominated_by) {
    const Pattern* p = resolve(key);
    if (p == nullptr) {
      throw std::invalid_argument("unresolvable nominating pattern: " + key);
    }
    sum += std::log(1.0 + static_cast<double>(p->f()));
  }
  return sum / static_cast<double>(nominated_by.size());
}

double basilisk_entity_score(const std::set<std::string>& nominated_by,
                             const PatternResolver& resolve, double log_base) {
  return score_in_base(basilisk_entity_rank(nominated_by, resolve), log_base);
}

double basilisk_pattern_rank(int n_with_name, int n_total) {
  if (n_total == 0 || n_with_name == 0) return 0.0;
  return (static_cast<double>(n_with_name) / static_cast<double>(n_total)) *
         std::log(static_cast<double>(n_with_name));
}

double basilisk_pattern_score(int n_with_name, int n_total, double log_base) {
  return score_in_base(basilisk_pattern_rank(n_with_name, n_total), log_base);
}

double score_in_base(double rank, double log_base) {
  return rank / std::log(log_base);
}

double score_entity(const CandidatePair& candidate,
                    const PatternResolver& resolve, double log_base) {
  return basilisk_entity_score(candidate.nominated_by, resolve, log_base);
}

double score_pattern(const Pattern& pattern,
                     const std::vector<const EntityContextPair*>& known_pairs,
                     double log_base) {
  int n = 0;
  int big_n = 0;
  pattern_counts(pattern, known_pairs, &n, &big_n);
  return basilisk_pattern_score(n, big_n, log_base);
}

double score_pattern(const CandidatePattern& candidate,
                     const KnowledgeState& state, double log_base) {
  return score_in_base(score_pattern_rank(candidate, state), log_base);
}

double score_pattern_rank(const CandidatePattern& candidate,
                          const KnowledgeState& state) {
  std::vector<const EntityContextPair*> pairs;
  auto it = state.by_type.find(candidate.pattern.entity_type());
  if (it != state.by_type.end()) {
    pairs.reserve(it->second.pairs.size());
    for (const auto& [key, pair] : it->second.pairs) pairs.push_back(&pair);
  }
  int n = 0;
  int big_n = 0;
  pattern_counts(candidate.pattern, pairs, &n, &big_n);
  return basilisk_pattern_rank(n, big_n);
}

std::vector<size_t> promote(std::vector<ScoredRef> scored, double fraction) {
  if (fraction <= 0.0 || fraction > 1.0) {
    throw std::invalid_argument("promotion fraction must be in (0, 1]");
  }
  if (scored.empty()) return {};
  std::sort(scored.begin(), scored.end(),
            [](const ScoredRef& a, const ScoredRef& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.key < b.key;
            });
  bool any_positive = scored.front().score > 0.0;
  size_t take = static_cast<size_t>(
      std::ceil(fraction * static_cast<double>(scored.size())));
  std::vector<size_t> promoted;
  for (size_t i = 0; i < take && i < scored.size(); ++i) {
    if (any_positive && scored[i].score <= 0.0) break;  // sorted: rest worse
    promoted.push_back(scored[i].index);
  }
  return promoted;
}

}  // namespace pace
