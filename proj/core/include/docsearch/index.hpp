#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "docsearch/analyzer.hpp"

namespace docsearch {

// Positional posting for one (term, chunk) pair.
struct Posting {
  std::string chunk_ref;
  std::uint32_t term_frequency = 0;
  std::vector<std::uint32_t> positions;  // strictly increasing
};

struct IndexStats {
  std::size_t total_chunks = 0;
  double avg_chunk_length = 0.0;
  std::map<std::string, std::uint32_t> chunk_lengths;
};

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

struct ScoredChunk {
  std::string chunk_ref;
  double score = 0.0;

  bool operator==(const ScoredChunk&) const = default;
};

// Positional inverted index over chunks. Chunk length is the number of
// tokens supplied to add_chunk. Reads take a shared lock, writes an
// exclusive one, so a query never observes a half-added chunk.
class InvertedIndex {
 public:
  explicit InvertedIndex(Bm25Params params = {}) : params_(params) {}

  void add_chunk(const std::string& chunk_ref, std::span<const Token> tokens);
  void remove_chunk(const std::string& chunk_ref);
  bool contains(const std::string& chunk_ref) const;
  void clear();

  IndexStats stats() const;
  Bm25Params params() const { return params_; }

  // Sum of the per-term BM25 contributions over the query multiset, with
  // IDF(t) = ln(1 + (N - n(t) + 0.5) / (n(t) + 0.5)). Terms absent from the
  // chunk contribute zero. Duplicate query terms count twice.
  double bm25_score(const std::vector<std::string>& query_terms,
                    const std::string& chunk_ref) const;
  double bm25_score(const std::vector<std::string>& query_terms,
                    const std::string& chunk_ref, Bm25Params params) const;

  // Chunks containing every query token at the query's relative positions
  // (consecutive tokens must be consecutive in the chunk; an indexed-side
  // stopword gap breaks the match). Results are BM25-scored over the query
  // term multiset and ordered by (score desc, chunk_ref asc).
  std::vector<ScoredChunk> query_phrase(std::span<const Token> query_tokens) const;

  // Chunks containing every distinct query term at least once.
  std::vector<ScoredChunk> query_all(const std::vector<std::string>& query_terms) const;

  // Chunks containing at least one query term.
  std::vector<ScoredChunk> query_any(const std::vector<std::string>& query_terms) const;

 private:
  double score_locked(const std::vector<std::string>& query_terms,
                      const std::string& chunk_ref, Bm25Params params) const;
  std::vector<ScoredChunk> rank_locked(std::vector<std::string> chunk_refs,
                                       const std::vector<std::string>& query_terms) const;

  mutable std::shared_mutex mutex_;
  Bm25Params params_;
  // term -> (chunk_ref -> posting); ordered maps keep iteration deterministic
  std::map<std::string, std::map<std::string, Posting>> postings_;
  std::map<std::string, std::uint32_t> chunk_lengths_;
  std::uint64_t total_tokens_ = 0;
};

}  // namespace docsearch
