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

#include "pace/domain.hpp"

#include <stdexcept>

namespace pace {

std::string canonical_key(const std::string& entity_type,
                          const TokenSeq& prefix_slot, const TokenSeq& name_slot,
                          const TokenSeq& suffix_slot) {
  std::string key = entity_type;
  key.push_back(kFieldSep);
  key += join_tokens(prefix_slot);
  key.push_back(kFieldSep);
  key += join_tokens(name_slot);
  key.push_back(kFieldSep);
  key += join_tokens(suffix_slot);
  return key;
}

std::string EntityContextPair::key() const {
  return canonical_key(entity_type, prefix, name, suffix);
}

Pattern Pattern::make(std::string entity_type, TokenSeq prefix_slot,
                      TokenSeq name_slot, TokenSeq suffix_slot,
                      std::string origin) {
  if (prefix_slot.empty() && name_slot.empty() && suffix_slot.empty()) {
    throw std::invalid_argument(
        "trivial pattern: all of prefix, name and suffix are empty");
  }
  Pattern p;
  p.entity_type_ = std::move(entity_type);
  p.prefix_slot_ = std::move(prefix_slot);
  p.name_slot_ = std::move(name_slot);
  p.suffix_slot_ = std::move(suffix_slot);
  p.origin_ = std::move(origin);
  return p;
}

std::string Pattern::key() const {
  return canonical_key(entity_type_, prefix_slot_, name_slot_, suffix_slot_);
}

std::set<std::string> TypeKnowledge::known_name_keys() const {
  std::set<std::string> keys;
  for (const auto& [key, pair] : pairs) keys.insert(pair.name_key());
  return keys;
}

bool KnowledgeState::insert_pair(const EntityContextPair& pair) {
  auto& slot = by_type[pair.entity_type].pairs;
  return slot.emplace(pair.key(), pair).second;
}

bool KnowledgeState::insert_pattern(const Pattern& pattern) {
  auto& slot = by_type[pattern.entity_type()].patterns;
  return slot.emplace(pattern.key(), pattern).second;
}

const Pattern* KnowledgeState::find_pattern(
    const std::string& entity_type, const std::string& pattern_key) const {
  auto type_it = by_type.find(entity_type);
  if (type_it == by_type.end()) return nullptr;
  auto it = type_it->second.patterns.find(pattern_key);
  return it == type_it->second.patterns.end() ? nullptr : &it->second;
}

Pattern* KnowledgeState::find_pattern(const std::string& entity_type,
                                      const std::string& pattern_key) {
  auto type_it = by_type.find(entity_type);
  if (type_it == by_type.end()) return nullptr;
  auto it = type_it->second.patterns.find(pattern_key);
  return it == type_it->second.patterns.end() ? nullptr : &it->second;
}

size_t KnowledgeState::pair_count() const {
  size_t n = 0;
  for (const auto& [type, knowledge] : by_type) n += knowledge.pairs.size();
  return n;
}

size_t KnowledgeState::pattern_count() const {
  size_t n = 0;
  for (const auto& [type, knowledge] : by_type) n += knowledge.patterns.size();
  return n;
}

}  // namespace pace
