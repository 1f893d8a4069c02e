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

#ifndef PACE_CORPUS_HPP
#define PACE_CORPUS_HPP

#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pace/text.hpp"
#include "pace/tokens.hpp"

namespace pace {

// A preprocessed source document. Tokens are the filtered (stopword-free)
// stream; chunks index into it. Both are computed once at ingestion.
struct Document {
  std::string id;
  std::vector<Token> tokens;
  std::vector<ChunkSpan> chunks;
  int ingested_at_cycle = 0;
};

// Traversal accounting. One traversal = one visit of every live document.
class ScanCounter {
 public:
  int traversals() const { return traversals_; }
  int visits(const std::string& doc_id) const;
  const std::map<std::string, int>& visits_by_doc() const { return visits_; }

  void record_traversal(const std::vector<std::string>& visited_ids);

 private:
  int traversals_ = 0;
  std::map<std::string, int> visits_;
};

// Holds ingested documents for the per-cycle scans and evicts them once they
// exceed the configured lifetime. Enumeration is virtual so tests can
// substitute a store that faults on any document access.
class CorpusStore {
 public:
  CorpusStore() = default;
  explicit CorpusStore(TextPipeline pipeline) : pipeline_(std::move(pipeline)) {}
  virtual ~CorpusStore() = default;

  // Preprocesses and stores a document. Throws std::invalid_argument if the
  // id is already live.
  const Document& ingest(const std::string& id, const std::string& text,
                         int cycle);

  // Removes documents whose age in cycles is >= ttl; returns the evicted ids
  // (sorted). No ttl means nothing expires. Knowledge learned from evicted
  // documents is unaffected by design.
  std::vector<std::string> expire(int current_cycle, std::optional<int> ttl);

  // Live documents in id order. The single access point for scans.
  virtual std::vector<const Document*> live_documents() const;

  size_t size() const { return docs_.size(); }
  bool contains(const std::string& id) const { return docs_.count(id) > 0; }

  const ScanCounter& scan_counter() const { return counter_; }
  const TextPipeline& pipeline() const { return pipeline_; }

  // One corpus traversal: applies fn to every live document and returns the
  // per-document results in document-id order regardless of the number of
  // worker threads, so downstream aggregation is order-independent.
  template <typename R>
  std::vector<R> map_docs(const std::function<R(const Document&)>& fn,
                          int jobs = 1) {
    std::vector<const Document*> docs = live_documents();
    std::vector<std::string> ids;
    ids.reserve(docs.size());
    for (const Document* d : docs) ids.push_back(d->id);
    counter_.record_traversal(ids);

    std::vector<R> results(docs.size());
    if (jobs <= 1 || docs.size() <= 1) {
      for (size_t i = 0; i < docs.size(); ++i) results[i] = fn(*docs[i]);
      return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= docs.size()) break;
        results[i] = fn(*docs[i]);
      }
    };
    std::vector<std::thread> pool;
    size_t nthreads = std::min<size_t>(static_cast<size_t>(jobs), docs.size());
    pool.reserve(nthreads);
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
  }

  // Traversal without results, for visitors with side effects of their own.
  void scan(const std::function<void(const Document&)>& visitor);

 private:
  TextPipeline pipeline_;
  std::map<std::string, Document> docs_;
  ScanCounter counter_;
};

}  // namespace pace

#endif  // PACE_CORPUS_HPP
