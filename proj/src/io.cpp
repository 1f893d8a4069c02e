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

#include "pace/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pace {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string field_text(const json& obj, const char* field) {
  if (!obj.contains(field)) return "";
  if (!obj[field].is_string())
    throw std::runtime_error(std::string(field) + " must be a string");
  return obj[field].get<std::string>();
}

json config_json(const RunConfig& config, const RunPaths& paths) {
  json j;
  j["algorithm"] =
      config.algorithm == Algorithm::kPace ? "pace" : "traditional";
  j["iterations"] = config.iterations;
  j["entity_fraction"] = config.policy.entity_fraction;
  j["pattern_fraction"] = config.policy.pattern_fraction;
  j["log_base"] = config.policy.log_base;
  j["context_radius"] = config.limits.context_radius;
  j["max_name_tokens"] = config.limits.max_name_tokens;
  j["ttl"] = config.ttl.has_value() ? json(*config.ttl) : json(nullptr);
  j["same_doc_filter"] = config.same_doc_filter;
  j["seeds"] = paths.seeds;
  j["corpus"] = paths.corpus;
  j["stopwords"] = paths.stopwords;
  j["filter"] = paths.filter.has_value() ? json(*paths.filter) : json(nullptr);
  return j;
}

json pattern_json(const Pattern& p) {
  json j;
  j["prefix"] = p.prefix_slot();
  j["name"] = p.name_slot();
  j["suffix"] = p.suffix_slot();
  j["origin"] = p.origin();
  j["f"] = p.f();
  j["matched_names"] = p.matched_names();
  return j;
}

json pair_json(const EntityContextPair& p) {
  json j;
  j["name"] = p.name;
  j["prefix"] = p.prefix;
  j["suffix"] = p.suffix;
  j["name_surface"] = p.name_surface;
  j["prefix_surface"] = p.prefix_surface;
  j["suffix_surface"] = p.suffix_surface;
  j["source"] = p.source;
  j["learned_at"] = p.learned_at;
  return j;
}

json entity_types_json(const SeedData& seeds) {
  json arr = json::array();
  for (const EntityType& t : seeds.entity_types) {
    arr.push_back({{"id", t.id}, {"display_name", t.display_name}});
  }
  return arr;
}

json candidate_pattern_json(const CandidatePattern& c) {
  json j = pattern_json(c.pattern);
  j.erase("f");
  j.erase("matched_names");
  j["score"] = c.score;
  j["parents"] = c.parents;
  return j;
}

json candidate_pair_json(const CandidatePair& c) {
  json j = pair_json(c.pair);
  j.erase("learned_at");
  j["score"] = c.score;
  j["nominated_by"] = c.nominated_by;
  return j;
}

}  // namespace

SeedReport parse_seed_file(const std::string& path,
                           const TextPipeline& pipeline, const Limits& limits) {
  return parse_seed_json(read_file(path), pipeline, limits);
}

SeedReport parse_seed_json(const std::string& json_text,
                           const TextPipeline& pipeline, const Limits& limits) {
  SeedReport report;
  json root;
  try {
    root = json::parse(json_text);
  } catch (const std::exception& e) {
    report.violations.push_back(std::string("malformed JSON: ") + e.what());
    return report;
  }
  if (!root.is_object()) {
    report.violations.push_back("seed file root must be a JSON object");
    return report;
  }

  std::set<std::string> declared;
  for (size_t i = 0; root.contains("entity_types") &&
                     i < root["entity_types"].size();
       ++i) {
    const json& t = root["entity_types"][i];
    try {
      EntityType type;
      if (t.is_string()) {
        type.id = t.get<std::string>();
        type.display_name = type.id;
      } else if (t.is_object()) {
        type.id = field_text(t, "id");
        type.display_name = field_text(t, "display_name");
        if (type.display_name.empty()) type.display_name = type.id;
      } else {
        throw std::runtime_error("must be a string or object");
      }
      if (type.id.empty()) throw std::runtime_error("id must be non-empty");
      if (!declared.insert(type.id).second)
        throw std::runtime_error("duplicate id '" + type.id + "'");
      report.data.entity_types.push_back(std::move(type));
    } catch (const std::exception& e) {
      report.violations.push_back("entity_types[" + std::to_string(i) +
                                  "]: " + e.what());
    }
  }

  auto check_type = [&](const std::string& type) {
    if (declared.count(type) == 0)
      throw std::runtime_error("undeclared entity type '" + type + "'");
  };
  auto bounded = [&](const TokenSeq& seq, int max, const char* what) {
    if (static_cast<int>(seq.size()) > max) {
      throw std::runtime_error(std::string(what) + " normalizes to " +
                               std::to_string(seq.size()) + " tokens (max " +
                               std::to_string(max) + ")");
    }
  };

  for (size_t i = 0; root.contains("pairs") && i < root["pairs"].size(); ++i) {
    const json& p = root["pairs"][i];
    try {
      if (!p.is_object()) throw std::runtime_error("must be an object");
      EntityContextPair pair;
      pair.entity_type = field_text(p, "type");
      check_type(pair.entity_type);
      pair.name_surface = field_text(p, "name");
      pair.prefix_surface = field_text(p, "prefix");
      pair.suffix_surface = field_text(p, "suffix");
      pair.name = pipeline.normalize_phrase(pair.name_surface);
      pair.prefix = pipeline.normalize_phrase(pair.prefix_surface);
      pair.suffix = pipeline.normalize_phrase(pair.suffix_surface);
      if (pair.name.empty())
        throw std::runtime_error(
            "name normalizes to zero tokens (stopwords only?)");
      bounded(pair.name, limits.max_name_tokens, "name");
      bounded(pair.prefix, limits.context_radius, "prefix");
      bounded(pair.suffix, limits.context_radius, "suffix");
      pair.source = kSeedSource;
      pair.learned_at = 0;
      report.data.pairs.push_back(std::move(pair));
    } catch (const std::exception& e) {
      report.violations.push_back("pairs[" + std::to_string(i) +
                                  "]: " + e.what());
    }
  }

  for (size_t i = 0; root.contains("patterns") && i < root["patterns"].size();
       ++i) {
    const json& p = root["patterns"][i];
    try {
      if (!p.is_object()) throw std::runtime_error("must be an object");
      std::string type = field_text(p, "type");
      check_type(type);
      TokenSeq prefix = pipeline.normalize_phrase(field_text(p, "prefix"));
      TokenSeq name = pipeline.normalize_phrase(field_text(p, "name"));
      TokenSeq suffix = pipeline.normalize_phrase(field_text(p, "suffix"));
      bounded(name, limits.max_name_tokens, "name");
      bounded(prefix, limits.context_radius, "prefix");
      bounded(suffix, limits.context_radius, "suffix");
      if (prefix.empty() && name.empty() && suffix.empty())
        throw std::runtime_error(
            "trivial pattern: all slots empty after normalization");
      report.data.patterns.push_back(Pattern::make(
          std::move(type), std::move(prefix), std::move(name),
          std::move(suffix), "seed"));
    } catch (const std::exception& e) {
      report.violations.push_back("patterns[" + std::to_string(i) +
                                  "]: " + e.what());
    }
  }
  return report;
}

KnowledgeState seed_knowledge(const SeedData& seeds) {
  if (seeds.pairs.empty() && seeds.patterns.empty()) {
    throw std::invalid_argument(
        "seed data must provide at least one pair or pattern");
  }
  KnowledgeState state;
  for (const EntityContextPair& pair : seeds.pairs) state.insert_pair(pair);
  for (const Pattern& pattern : seeds.patterns) {
    Pattern p = pattern;
    initialize_matched_names(p, state.by_type[p.entity_type()].pairs);
    state.insert_pattern(p);
  }
  return state;
}

BaselineKnowledge seed_baseline_knowledge(const SeedData& seeds) {
  if (seeds.pairs.empty() && seeds.patterns.empty()) {
    throw std::invalid_argument(
        "seed data must provide at least one pair or pattern");
  }
  BaselineKnowledge state;
  std::map<std::string, std::map<std::string, EntityContextPair>> seed_pairs;
  for (const EntityContextPair& pair : seeds.pairs) {
    state.insert_name(pair.entity_type,
                      {pair.name, pair.name_surface, 0});
    seed_pairs[pair.entity_type].emplace(pair.key(), pair);
  }
  for (const Pattern& pattern : seeds.patterns) {
    Pattern p = pattern;
    initialize_matched_names(p, seed_pairs[p.entity_type()]);
    state.insert_pattern(p);
  }
  return state;
}

std::string result_json(const RunConfig& config, const RunPaths& paths,
                        const SeedData& seeds, const KnowledgeState& state,
                        const RunTrace& trace) {
  json j;
  j["algorithm"] = "pace";
  j["config"] = config_json(config, paths);
  j["entity_types"] = entity_types_json(seeds);

  json patterns = json::object();
  json pairs = json::object();
  for (const auto& [type, knowledge] : state.by_type) {
    json parr = json::array();
    for (const auto& [key, p] : knowledge.patterns)
      parr.push_back(pattern_json(p));
    patterns[type] = std::move(parr);
    json qarr = json::array();
    for (const auto& [key, p] : knowledge.pairs) qarr.push_back(pair_json(p));
    pairs[type] = std::move(qarr);
  }
  j["known_patterns"] = std::move(patterns);
  j["known_pairs"] = std::move(pairs);

  json cycles = json::array();
  for (const CycleRecord& rec : trace.cycles) {
    json c;
    c["cycle"] = rec.cycle;
    c["traversals"] = rec.traversals;
    c["evicted"] = rec.evicted;
    json per_type = json::object();
    std::set<std::string> types;
    for (const auto& [t, v] : rec.pattern_candidates) types.insert(t);
    for (const auto& [t, v] : rec.pair_candidates) types.insert(t);
    for (const std::string& t : types) {
      json tj;
      auto count = [](const auto& m, const std::string& key) -> size_t {
        auto it = m.find(key);
        return it == m.end() ? 0 : it->second.size();
      };
      tj["pattern_candidates"] = count(rec.pattern_candidates, t);
      tj["patterns_promoted"] = count(rec.promoted_patterns, t);
      tj["pair_candidates"] = count(rec.pair_candidates, t);
      tj["pairs_promoted"] = count(rec.promoted_pairs, t);
      per_type[t] = std::move(tj);
    }
    c["per_type"] = std::move(per_type);
    cycles.push_back(std::move(c));
  }
  j["cycles"] = std::move(cycles);
  j["traversals"] = trace.total_traversals;
  j["termination"] = termination_name(trace.termination);
  return j.dump(2) + "\n";
}

std::string result_json(const RunConfig& config, const RunPaths& paths,
                        const SeedData& seeds, const BaselineKnowledge& state,
                        const BaselineTrace& trace) {
  json j;
  j["algorithm"] = "traditional";
  j["config"] = config_json(config, paths);
  j["entity_types"] = entity_types_json(seeds);

  json patterns = json::object();
  json names = json::object();
  for (const auto& [type, knowledge] : state.by_type) {
    json parr = json::array();
    for (const auto& [key, p] : knowledge.patterns)
      parr.push_back(pattern_json(p));
    patterns[type] = std::move(parr);
    json narr = json::array();
    for (const auto& [key, n] : knowledge.names) {
      narr.push_back({{"name", n.tokens},
                      {"surface", n.surface},
                      {"learned_at", n.learned_at}});
    }
    names[type] = std::move(narr);
  }
  j["known_patterns"] = std::move(patterns);
  j["known_names"] = std::move(names);

  json cycles = json::array();
  for (const BaselineCycleRecord& rec : trace.cycles) {
    json c;
    c["cycle"] = rec.cycle;
    c["traversals"] = rec.traversals;
    c["evicted"] = rec.evicted;
    json per_type = json::object();
    std::set<std::string> types;
    for (const auto& [t, v] : rec.pattern_candidates) types.insert(t);
    for (const auto& [t, v] : rec.name_candidates) types.insert(t);
    for (const std::string& t : types) {
      json tj;
      auto count = [](const auto& m, const std::string& key) -> size_t {
        auto it = m.find(key);
        return it == m.end() ? 0 : it->second.size();
      };
      tj["pattern_candidates"] = count(rec.pattern_candidates, t);
      tj["patterns_promoted"] = count(rec.promoted_patterns, t);
      tj["name_candidates"] = count(rec.name_candidates, t);
      tj["names_promoted"] = count(rec.promoted_names, t);
      per_type[t] = std::move(tj);
    }
    c["per_type"] = std::move(per_type);
    cycles.push_back(std::move(c));
  }
  j["cycles"] = std::move(cycles);
  j["traversals"] = trace.total_traversals;
  j["termination"] = termination_name(trace.termination);
  return j.dump(2) + "\n";
}

namespace {

void append_line(std::string& out, json j) { out += j.dump() + "\n"; }

}  // namespace

std::string trace_ndjson(const RunConfig& config, const RunTrace& trace) {
  std::string out;
  append_line(out, {{"event", "run_start"},
                    {"algorithm", "pace"},
                    {"iterations", config.iterations}});
  for (const CycleRecord& rec : trace.cycles) {
    append_line(out, {{"event", "cycle_start"}, {"cycle", rec.cycle}});
    for (const auto& [type, cands] : rec.pattern_candidates) {
      json arr = json::array();
      for (const CandidatePattern& c : cands)
        arr.push_back(candidate_pattern_json(c));
      append_line(out, {{"event", "pattern_candidates"},
                        {"cycle", rec.cycle},
                        {"type", type},
                        {"candidates", std::move(arr)}});
    }
    for (const auto& [type, promoted] : rec.promoted_patterns) {
      json arr = json::array();
      for (const Pattern& p : promoted) arr.push_back(pattern_json(p));
      append_line(out, {{"event", "patterns_promoted"},
                        {"cycle", rec.cycle},
                        {"type", type},
                        {"patterns", std::move(arr)}});
    }
    append_line(out, {{"event", "scan"},
                      {"cycle", rec.cycle},
                      {"traversals", rec.traversals},
                      {"f_updates", rec.f_updates}});
    for (const auto& [type, cands] : rec.pair_candidates) {
      json arr = json::array();
      for (const CandidatePair& c : cands)
        arr.push_back(candidate_pair_json(c));
      append_line(out, {{"event", "pair_candidates"},
                        {"cycle", rec.cycle},
                        {"type", type},
                        {"candidates", std::move(arr)}});
    }
    for (const auto& [type, promoted] : rec.promoted_pairs) {
      json arr = json::array();
      for (const EntityContextPair& p : promoted) arr.push_back(pair_json(p));
      append_line(out, {{"event", "pairs_promoted"},
                        {"cycle", rec.cycle},
                        {"type", type},
                        {"pairs", std::move(arr)}});
    }
    append_line(out, {{"event", "cycle_end"},
                      {"cycle", rec.cycle},
                      {"evicted", rec.evicted},
                      {"new_patterns", rec.promoted_pattern_count()},
                      {"new_pairs", rec.promoted_pair_count()}});
  }
  append_line(out, {{"event", "run_end"},
                    {"cycles", trace.cycles.size()},
                    {"traversals", trace.total_traversals},
                    {"termination", termination_name(trace.termination)}});
  return out;
}

std::string trace_ndjson(const RunConfig& config, const BaselineTrace& trace) {
  std::string out;
  append_line(out, {{"event", "run_start"},
                    {"algorithm", "traditional"},
                    {"iterations", config.iterations}});
  for (const BaselineCycleRecord& rec : trace.cycles) {
    append_line(out, {{"event", "cycle_start"}, {"cycle", rec.cycle}});
    for (const auto& [type, cands] : rec.pattern_candidates) {
      json arr = json::array();
      for (const BaselineCandidatePattern& c : cands) {
        json cj = pattern_json(c.pattern);
        cj.erase("f");
        cj.erase("matched_names");
        cj["score"] = c.score;
        cj["support_docs"] = c.support_docs;
        arr.push_back(std::move(cj));
      }
      append_line(out, {{"event", "pattern_candidates"},
                        {"cycle", rec.cycle},
                        {"type", type},
                        {"candidates", std::move(arr)}});
    }
    for (const auto& [type, promoted] : rec.promoted_patterns) {
      json arr = json::array();
      for (const Pattern& p : promoted) arr.push_back(pattern_json(p));
      append_line(out, {{"event", "patterns_promoted"},
                        {"cycle", rec.cycle},
                        {"type", type},
                        {"patterns", std::move(arr)}});
    }
    for (const auto& [type, cands] : rec.name_candidates) {
      json arr = json::array();
      for (const BaselineCandidateName& c : cands) {
        arr.push_back({{"name", c.name},
                       {"surface", c.surface},
                       {"score", c.score},
                       {"nominated_by", c.nominated_by},
                       {"sources", c.sources}});
      }
      append_line(out, {{"event", "name_candidates"},
                        {"cycle", rec.cycle},
                        {"type", type},
                        {"candidates", std::move(arr)}});
    }
    for (const auto& [type, promoted] : rec.promoted_names) {
      json arr = json::array();
      for (const KnownName& n : promoted) {
        arr.push_back({{"name", n.tokens},
                       {"surface", n.surface},
                       {"learned_at", n.learned_at}});
      }
      append_line(out, {{"event", "names_promoted"},
                        {"cycle", rec.cycle},
                        {"type", type},
                        {"names", std::move(arr)}});
    }
    append_line(out, {{"event", "cycle_end"},
                      {"cycle", rec.cycle},
                      {"evicted", rec.evicted},
                      {"new_names", rec.promoted_name_count()}});
  }
  append_line(out, {{"event", "run_end"},
                    {"cycles", trace.cycles.size()},
                    {"traversals", trace.total_traversals},
                    {"termination", termination_name(trace.termination)}});
  return out;
}

size_t ingest_directory(CorpusStore& store, const std::string& dir,
                        const std::function<bool(const std::string&)>& admit,
                        int cycle) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw std::runtime_error("corpus directory not found: " + dir);
  std::vector<std::string> paths;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() != ".txt") continue;
    paths.push_back(fs::relative(entry.path(), dir).generic_string());
  }
  std::sort(paths.begin(), paths.end());
  size_t ingested = 0;
  for (const std::string& rel : paths) {
    if (admit && !admit(rel)) continue;
    store.ingest(rel, read_file((fs::path(dir) / rel).string()), cycle);
    ++ingested;
  }
  return ingested;
}

std::function<bool(const std::string&)> admission_from_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read filter file: " + path);
  auto allowed = std::make_shared<std::set<std::string>>();
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r\n");
    allowed->insert(line.substr(b, e - b + 1));
  }
  return [allowed](const std::string& id) { return allowed->count(id) > 0; };
}

}  // namespace pace
