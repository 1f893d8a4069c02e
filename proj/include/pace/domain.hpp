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

#ifndef PACE_DOMAIN_HPP
#define PACE_DOMAIN_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pace/tokens.hpp"

namespace pace {

// Slot length bounds. Defaults mirror the five-token context radius and the
// at-most-ten-token name rule.
struct Limits {
  int context_radius = 5;
  int max_name_tokens = 10;
};

struct EntityType {
  std::string id;            // short symbolic name, e.g. software_name
  std::string display_name;
};

inline const std::string kSeedSource = "seed";

// An entity name stored together with the context in which it was observed.
// Equality (via key()) is over (entity_type, prefix, name, suffix) on
// normalized tokens; surfaces, source and learned_at are metadata and the
// same name may recur with different contexts.
struct EntityContextPair {
  std::string entity_type;
  TokenSeq name;    // 1..max_name_tokens normalized tokens
  TokenSeq prefix;  // 0..context_radius
  TokenSeq suffix;  // 0..context_radius
  std::string name_surface;
  std::string prefix_surface;
  std::string suffix_surface;
  std::string source = kSeedSource;  // document id or "seed"
  int learned_at = 0;                // iteration number; 0 for seeds
  double promotion_score = 0.0;      // candidate score when promoted; 0 for seeds

  std::string key() const;
  std::string name_key() const { return join_tokens(name); }
};

// A [prefix, name, suffix] token-slot triple. Empty slots match vacuously;
// the all-empty pattern is rejected at construction. `f` is the number of
// distinct known entity names the pattern has matched so far.
class Pattern {
 public:
  // Throws std::invalid_argument if every slot is empty.
  static Pattern make(std::string entity_type, TokenSeq prefix_slot,
                      TokenSeq name_slot, TokenSeq suffix_slot,
                      std::string origin = "learned");

  const std::string& entity_type() const { return entity_type_; }
  const TokenSeq& prefix_slot() const { return prefix_slot_; }
  const TokenSeq& name_slot() const { return name_slot_; }
  const TokenSeq& suffix_slot() const { return suffix_slot_; }
  const std::string& origin() const { return origin_; }

  int f() const { return static_cast<int>(matched_names_.size()); }
  const std::set<std::string>& matched_names() const { return matched_names_; }

  double promotion_score() const { return promotion_score_; }
  void set_promotion_score(double score) { promotion_score_ = score; }
  // Records that the pattern matched a known entity name (normalized name
  // key). Idempotent; f is therefore a count of distinct names and never
  // decreases.
  void record_matched_name(const std::string& name_key) {
    matched_names_.insert(name_key);
  }

  std::string key() const;

 private:
  Pattern() = default;

  std::string entity_type_;
  TokenSeq prefix_slot_;
  TokenSeq name_slot_;
  TokenSeq suffix_slot_;
  std::string origin_;
  std::set<std::string> matched_names_;
  double promotion_score_ = 0.0;
};

// Stable serialization of a pattern's identity: entity type then the three
// slots, with reserved separators. Equal patterns have equal keys and keys
// sort lexicographically, which fixes one deterministic order over any
// pattern set.
std::string canonical_key(const std::string& entity_type,
                          const TokenSeq& prefix_slot, const TokenSeq& name_slot,
                          const TokenSeq& suffix_slot);
inline std::string canonical_key(const Pattern& p) { return p.key(); }

// Known pairs and known patterns for one entity type, keyed canonically so
// iteration order is deterministic. Sets only grow; inserting a duplicate is
// a no-op.
struct TypeKnowledge {
  std::map<std::string, EntityContextPair> pairs;
  std::map<std::string, Pattern> patterns;

  std::set<std::string> known_name_keys() const;
};

struct KnowledgeState {
  std::map<std::string, TypeKnowledge> by_type;

  // Returns true if the element was new.
  bool insert_pair(const EntityContextPair& pair);
  bool insert_pattern(const Pattern& pattern);

  const Pattern* find_pattern(const std::string& entity_type,
                              const std::string& pattern_key) const;
  Pattern* find_pattern(const std::string& entity_type,
                        const std::string& pattern_key);

  size_t pair_count() const;
  size_t pattern_count() const;
};

}  // namespace pace

#endif  // PACE_DOMAIN_HPP
