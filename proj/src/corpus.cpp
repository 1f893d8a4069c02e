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

#include "pace/corpus.hpp"

#include <stdexcept>

namespace pace {

int ScanCounter::visits(const std::string& doc_id) const {
  auto it = visits_.find(doc_id);
  return it == visits_.end() ? 0 : it->second;
}

void ScanCounter::record_traversal(const std::vector<std::string>& ids) {
  ++traversals_;
  for (const auto& id : ids) ++visits_[id];
}

const Document& CorpusStore::ingest(const std::string& id,
                                    const std::string& text, int cycle) {
  if (docs_.count(id) > 0)
    throw std::invalid_argument("duplicate document id: " + id);
  Document doc;
  doc.id = id;
  doc.tokens = pipeline_.analyze(text);
  doc.chunks = pipeline_.chunk(doc.tokens);
  doc.ingested_at_cycle = cycle;
  auto [it, inserted] = docs_.emplace(id, std::move(doc));
  return it->second;
}

std::vector<std::string> CorpusStore::expire(int current_cycle,
                                             std::optional<int> ttl) {
  std::vector<std::string> evicted;
  if (!ttl.has_value()) return evicted;
  if (*ttl < 1) throw std::invalid_argument("ttl must be >= 1");
  for (auto it = docs_.begin(); it != docs_.end();) {
    if (current_cycle - it->second.ingested_at_cycle >= *ttl) {
      evicted.push_back(it->first);
      it = docs_.erase(it);
    } else {
      ++it;
    }
  }
  return evicted;
}

std::vector<const Document*> CorpusStore::live_documents() const {
  std::vector<const Document*> docs;
  docs.reserve(docs_.size());
  for (const auto& [id, doc] : docs_) docs.push_back(&doc);
  return docs;
}

void CorpusStore::scan(const std::function<void(const Document&)>& visitor) {
  map_docs<int>(
      [&](const Document& d) {
        visitor(d);
        return 0;
      },
      1);
}

}  // namespace pace
