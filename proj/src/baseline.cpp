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

#include "pace/baseline.hpp"

#include <algorithm>
#include <stdexcept>

#include "pace/scoring.hpp"

namespace pace {
namespace {

// One context window per chunk, the unit over which a candidate pattern's
// corpus-relative n and N are counted.
struct Window {
  TokenSeq prefix;
  TokenSeq chunk;
  TokenSeq suffix;
};

struct ScanOne {
  std::vector<Window> windows;
  // candidate pattern key -> (pattern, this document's id)
  std::vector<std::pair<Pattern, std::string>> nominations;
};

struct ScanTwo {
  struct Match {
    std::string entity_type;
    TokenSeq name;
    std::string surface;
    std::string pattern_key;
    std::string doc_id;
  };
  std::vector<Match> matches;
};

EntityContextPair window_as_pair(const Window& w) {
  EntityContextPair p;
  p.prefix = w.prefix;
  p.name = w.chunk;
  p.suffix = w.suffix;
  return p;
}

bool full_window_match(const Pattern& pattern, const Window& w) {
  return pattern_matches_pair(pattern, window_as_pair(w));
}

}  // namespace

bool BaselineKnowledge::insert_name(const std::string& type, KnownName name) {
  std::string key = join_tokens(name.tokens);
  return by_type[type].names.emplace(std::move(key), std::move(name)).second;
}

bool BaselineKnowledge::insert_pattern(const Pattern& pattern) {
  auto& slot = by_type[pattern.entity_type()].patterns;
  return slot.emplace(pattern.key(), pattern).second;
}

size_t BaselineKnowledge::name_count() const {
  size_t n = 0;
  for (const auto& [type, knowledge] : by_type) n += knowledge.names.size();
  return n;
}

size_t BaselineCycleRecord::promoted_name_count() const {
  size_t n = 0;
  for (const auto& [type, names] : promoted_names) n += names.size();
  return n;
}

TraditionalEngine::TraditionalEngine(RunConfig config, CorpusStore& corpus,
                                     BaselineKnowledge seeded)
    : config_(std::move(config)), corpus_(corpus), state_(std::move(seeded)) {
  if (config_.iterations < 1)
    throw std::invalid_argument("iterations must be >= 1");
}

const BaselineCycleRecord& TraditionalEngine::step() {
  if (finished())
    throw std::logic_error("engine already terminated");
  ++cycle_;
  BaselineCycleRecord rec;
  rec.cycle = cycle_;
  int radius = config_.limits.context_radius;
  int traversals_before = corpus_.scan_counter().traversals();

  // Traversal 1: locate occurrences of known names (a chunk containing the
  // name) and nominate the maximally specific pattern from each occurrence's
  // context; collect every chunk's context window for scoring.
  auto scan_one = [&](const Document& doc) {
    ScanOne out;
    int n = static_cast<int>(doc.tokens.size());
    for (ChunkSpan chunk : doc.chunks) {
      Window w;
      int pre_begin = std::max(0, chunk.start - radius);
      int suf_end = std::min(n, chunk.end + radius);
      for (int i = pre_begin; i < chunk.start; ++i)
        w.prefix.push_back(doc.tokens[i].normalized);
      for (int i = chunk.start; i < chunk.end; ++i)
        w.chunk.push_back(doc.tokens[i].normalized);
      for (int i = chunk.end; i < suf_end; ++i)
        w.suffix.push_back(doc.tokens[i].normalized);

      for (const auto& [type, knowledge] : state_.by_type) {
        for (const auto& [name_key, known] : knowledge.names) {
          Pattern probe = Pattern::make(type, {}, known.tokens, {});
          if (!name_slot_contained(probe, doc.tokens, chunk)) continue;
          out.nominations.emplace_back(
              Pattern::make(type, w.prefix, known.tokens, w.suffix), doc.id);
        }
      }
      out.windows.push_back(std::move(w));
    }
    return out;
  };
  std::vector<ScanOne> per_doc_one =
      corpus_.map_docs<ScanOne>(scan_one, config_.jobs);

  std::vector<Window> windows;
  std::map<std::string, std::map<std::string, BaselineCandidatePattern>>
      candidates_by_type;
  for (auto& one : per_doc_one) {
    for (auto& w : one.windows) windows.push_back(std::move(w));
    for (auto& [pattern, doc_id] : one.nominations) {
      const std::string& type = pattern.entity_type();
      if (state_.by_type[type].patterns.count(pattern.key()) > 0) continue;
      auto& slot = candidates_by_type[type];
      std::string key = pattern.key();
      auto it = slot.find(key);
      if (it == slot.end()) {
        slot.emplace(std::move(key), BaselineCandidatePattern{
                                         std::move(pattern), {doc_id}, 0.0});
      } else {
        it->second.support_docs.insert(doc_id);
      }
    }
  }

  // Score: N = corpus windows whose context matches the slots, n = those
  // also containing a known name of the type; promote the top fraction.
  for (auto& [type, by_key] : candidates_by_type) {
    const auto& known_names = state_.by_type[type].names;
    std::vector<BaselineCandidatePattern> cands;
    cands.reserve(by_key.size());
    for (auto& [key, cand] : by_key) {
      if (config_.same_doc_filter && cand.support_docs.size() < 2) continue;
      cands.push_back(std::move(cand));
    }
    std::vector<ScoredRef> scored;
    for (size_t i = 0; i < cands.size(); ++i) {
      int big_n = 0;
      int small_n = 0;
      for (const Window& w : windows) {
        EntityContextPair as_pair = window_as_pair(w);
        Document micro = pair_as_micro_doc(as_pair);
        if (!slots_context_match(cands[i].pattern, micro.tokens,
                                 micro.chunks.front()))
          continue;
        ++big_n;
        bool with_name = false;
        for (const auto& [name_key, known] : known_names) {
          Pattern probe = Pattern::make(type, {}, known.tokens, {});
          if (name_slot_contained(probe, micro.tokens, micro.chunks.front())) {
            with_name = true;
            break;
          }
        }
        if (with_name) ++small_n;
      }
      double rank = basilisk_pattern_rank(small_n, big_n);
      cands[i].score = score_in_base(rank, config_.policy.log_base);
      scored.push_back({rank, cands[i].pattern.key(), i});
    }
    for (size_t idx : promote(scored, config_.policy.pattern_fraction)) {
      Pattern p = cands[idx].pattern;
      // Initialize the match statistic from the windows this pattern fully
      // matches whose chunk is exactly a known name.
      for (const Window& w : windows) {
        if (!full_window_match(p, w)) continue;
        std::string chunk_key = join_tokens(w.chunk);
        if (known_names.count(chunk_key) > 0) p.record_matched_name(chunk_key);
      }
      state_.insert_pattern(p);
      rec.promoted_patterns[type].push_back(std::move(p));
    }
    rec.pattern_candidates[type] = std::move(cands);
  }

  // Traversal 2: match known patterns to nominate names.
  std::vector<const Pattern*> patterns;
  for (const auto& [type, knowledge] : state_.by_type)
    for (const auto& [key, pattern] : knowledge.patterns)
      patterns.push_back(&pattern);
  auto scan_two = [&](const Document& doc) {
    ScanTwo out;
    for (const Pattern* p : patterns) {
      for (CandidatePair& c : match_pattern(*p, doc, radius)) {
        out.matches.push_back({p->entity_type(), std::move(c.pair.name),
                               std::move(c.pair.name_surface), p->key(),
                               doc.id});
      }
    }
    return out;
  };
  std::vector<ScanTwo> per_doc_two =
      corpus_.map_docs<ScanTwo>(scan_two, config_.jobs);

  std::map<std::string, std::map<std::string, BaselineCandidateName>>
      names_by_type;
  for (const auto& two : per_doc_two) {
    for (const auto& m : two.matches) {
      auto& knowledge = state_.by_type[m.entity_type];
      std::string name_key = join_tokens(m.name);
      if (knowledge.names.count(name_key) > 0) {
        Pattern* p = &knowledge.patterns.at(m.pattern_key);
        p->record_matched_name(name_key);
        continue;
      }
      auto& slot = names_by_type[m.entity_type];
      auto it = slot.find(name_key);
      if (it == slot.end()) {
        BaselineCandidateName cand;
        cand.entity_type = m.entity_type;
        cand.name = m.name;
        cand.surface = m.surface;
        cand.nominated_by.insert(m.pattern_key);
        cand.sources.insert(m.doc_id);
        slot.emplace(std::move(name_key), std::move(cand));
      } else {
        it->second.nominated_by.insert(m.pattern_key);
        it->second.sources.insert(m.doc_id);
      }
    }
  }

  for (auto& [type, by_key] : names_by_type) {
    std::vector<BaselineCandidateName> cands;
    cands.reserve(by_key.size());
    for (auto& [key, cand] : by_key) cands.push_back(std::move(cand));
    std::vector<ScoredRef> scored;
    const auto& knowledge = state_.by_type[type];
    PatternResolver resolve = [&knowledge](const std::string& key) {
      auto it = knowledge.patterns.find(key);
      return it == knowledge.patterns.end() ? nullptr : &it->second;
    };
    for (size_t i = 0; i < cands.size(); ++i) {
      double rank = basilisk_entity_rank(cands[i].nominated_by, resolve);
      cands[i].score = score_in_base(rank, config_.policy.log_base);
      scored.push_back({rank, join_tokens(cands[i].name), i});
    }
    for (size_t idx : promote(scored, config_.policy.entity_fraction)) {
      KnownName name;
      name.tokens = cands[idx].name;
      name.surface = cands[idx].surface;
      name.learned_at = cycle_;
      state_.insert_name(type, std::move(name));
      rec.promoted_names[type].push_back(
          {cands[idx].name, cands[idx].surface, cycle_});
    }
    rec.name_candidates[type] = std::move(cands);
  }

  rec.traversals = corpus_.scan_counter().traversals() - traversals_before;
  rec.evicted = corpus_.expire(cycle_, config_.ttl);

  bool fixpoint = rec.promoted_name_count() == 0;
  trace_.cycles.push_back(std::move(rec));
  trace_.total_traversals = corpus_.scan_counter().traversals();
  if (fixpoint) {
    trace_.termination = Termination::kFixpoint;
  } else if (cycle_ >= config_.iterations) {
    trace_.termination = Termination::kIterationCap;
  }
  return trace_.cycles.back();
}

const BaselineTrace& TraditionalEngine::run() {
  while (!finished()) step();
  return trace_;
}

}  // namespace pace
