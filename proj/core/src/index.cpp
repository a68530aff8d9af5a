#include "docsearch/index.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>

#include "docsearch/errors.hpp"

namespace docsearch {

void InvertedIndex::add_chunk(const std::string& chunk_ref,
                              std::span<const Token> tokens) {
  std::unique_lock lock(mutex_);
  if (chunk_lengths_.contains(chunk_ref)) {
    throw Error(ErrorCode::duplicate,
                "chunk already indexed: " + chunk_ref);
  }
  for (const Token& tok : tokens) {
    Posting& p = postings_[tok.text][chunk_ref];
    if (p.chunk_ref.empty()) p.chunk_ref = chunk_ref;
    p.term_frequency += 1;
    p.positions.push_back(static_cast<std::uint32_t>(tok.position));
  }
  for (const Token& tok : tokens) {
    auto& positions = postings_[tok.text][chunk_ref].positions;
    std::sort(positions.begin(), positions.end());
  }
  chunk_lengths_[chunk_ref] = static_cast<std::uint32_t>(tokens.size());
  total_tokens_ += tokens.size();
}

void InvertedIndex::remove_chunk(const std::string& chunk_ref) {
  std::unique_lock lock(mutex_);
  auto it = chunk_lengths_.find(chunk_ref);
  if (it == chunk_lengths_.end()) {
    throw Error(ErrorCode::not_found, "chunk not indexed: " + chunk_ref);
  }
  total_tokens_ -= it->second;
  chunk_lengths_.erase(it);
  for (auto term_it = postings_.begin(); term_it != postings_.end();) {
    term_it->second.erase(chunk_ref);
    if (term_it->second.empty()) {
      term_it = postings_.erase(term_it);
    } else {
      ++term_it;
    }
  }
}

bool InvertedIndex::contains(const std::string& chunk_ref) const {
  std::shared_lock lock(mutex_);
  return chunk_lengths_.contains(chunk_ref);
}

void InvertedIndex::clear() {
  std::unique_lock lock(mutex_);
  postings_.clear();
  chunk_lengths_.clear();
  total_tokens_ = 0;
}

IndexStats InvertedIndex::stats() const {
  std::shared_lock lock(mutex_);
  IndexStats s;
  s.total_chunks = chunk_lengths_.size();
  s.chunk_lengths = chunk_lengths_;
  s.avg_chunk_length =
      s.total_chunks == 0
          ? 0.0
          : static_cast<double>(total_tokens_) / static_cast<double>(s.total_chunks);
  return s;
}

double InvertedIndex::bm25_score(const std::vector<std::string>& query_terms,
                                 const std::string& chunk_ref) const {
  return bm25_score(query_terms, chunk_ref, params_);
}

double InvertedIndex::bm25_score(const std::vector<std::string>& query_terms,
                                 const std::string& chunk_ref,
                                 Bm25Params params) const {
  std::shared_lock lock(mutex_);
  return score_locked(query_terms, chunk_ref, params);
}

double InvertedIndex::score_locked(const std::vector<std::string>& query_terms,
                                   const std::string& chunk_ref,
                                   Bm25Params params) const {
  auto len_it = chunk_lengths_.find(chunk_ref);
  if (len_it == chunk_lengths_.end()) {
    throw Error(ErrorCode::not_found, "chunk not indexed: " + chunk_ref);
  }
  const double n_chunks = static_cast<double>(chunk_lengths_.size());
  const double avgdl =
      n_chunks == 0.0 ? 0.0
                      : static_cast<double>(total_tokens_) / n_chunks;
  const double dl = static_cast<double>(len_it->second);

  double score = 0.0;
  for (const std::string& term : query_terms) {
    auto term_it = postings_.find(term);
    if (term_it == postings_.end()) continue;
    auto post_it = term_it->second.find(chunk_ref);
    if (post_it == term_it->second.end()) continue;
    const double df = static_cast<double>(term_it->second.size());
    const double idf = std::log(1.0 + (n_chunks - df + 0.5) / (df + 0.5));
    const double tf = static_cast<double>(post_it->second.term_frequency);
    const double denom =
        tf + params.k1 * (1.0 - params.b + params.b * dl / avgdl);
    score += idf * tf * (params.k1 + 1.0) / denom;
  }
  return score;
}

std::vector<ScoredChunk> InvertedIndex::rank_locked(
    std::vector<std::string> chunk_refs,
    const std::vector<std::string>& query_terms) const {
  std::vector<ScoredChunk> out;
  out.reserve(chunk_refs.size());
  for (std::string& ref : chunk_refs) {
    const double s = score_locked(query_terms, ref, params_);
    out.push_back(ScoredChunk{std::move(ref), s});
  }
  std::sort(out.begin(), out.end(), [](const ScoredChunk& a, const ScoredChunk& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.chunk_ref < b.chunk_ref;
  });
  return out;
}

std::vector<ScoredChunk> InvertedIndex::query_phrase(
    std::span<const Token> query_tokens) const {
  if (query_tokens.empty()) return {};
  std::shared_lock lock(mutex_);

  const auto first_it = postings_.find(query_tokens[0].text);
  if (first_it == postings_.end()) return {};

  // relative offsets of each query token from the first
  std::vector<std::uint32_t> offsets;
  offsets.reserve(query_tokens.size());
  for (const Token& t : query_tokens) {
    offsets.push_back(
        static_cast<std::uint32_t>(t.position - query_tokens[0].position));
  }

  std::vector<std::string> matches;
  for (const auto& [chunk_ref, first_posting] : first_it->second) {
    // gather the position sets of every query term for this chunk
    bool all_present = true;
    std::vector<const std::vector<std::uint32_t>*> position_lists;
    position_lists.reserve(query_tokens.size());
    for (const Token& t : query_tokens) {
      auto term_it = postings_.find(t.text);
      if (term_it == postings_.end()) return {};
      auto post_it = term_it->second.find(chunk_ref);
      if (post_it == term_it->second.end()) {
        all_present = false;
        break;
      }
      position_lists.push_back(&post_it->second.positions);
    }
    if (!all_present) continue;

    bool found = false;
    for (const std::uint32_t start : first_posting.positions) {
      bool ok = true;
      for (std::size_t i = 1; i < offsets.size(); ++i) {
        const auto& plist = *position_lists[i];
        if (!std::binary_search(plist.begin(), plist.end(),
                                start + offsets[i])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        found = true;
        break;
      }
    }
    if (found) matches.push_back(chunk_ref);
  }

  std::vector<std::string> terms;
  terms.reserve(query_tokens.size());
  for (const Token& t : query_tokens) terms.push_back(t.text);
  return rank_locked(std::move(matches), terms);
}

std::vector<ScoredChunk> InvertedIndex::query_all(
    const std::vector<std::string>& query_terms) const {
  if (query_terms.empty()) return {};
  std::shared_lock lock(mutex_);

  const std::set<std::string> distinct(query_terms.begin(), query_terms.end());
  std::vector<std::string> matches;
  // iterate candidates of the rarest term
  const std::map<std::string, Posting>* smallest = nullptr;
  for (const std::string& term : distinct) {
    auto it = postings_.find(term);
    if (it == postings_.end()) return {};
    if (smallest == nullptr || it->second.size() < smallest->size()) {
      smallest = &it->second;
    }
  }
  for (const auto& [chunk_ref, posting] : *smallest) {
    bool ok = true;
    for (const std::string& term : distinct) {
      const auto& chunk_map = postings_.find(term)->second;
      if (!chunk_map.contains(chunk_ref)) {
        ok = false;
        break;
      }
    }
    if (ok) matches.push_back(chunk_ref);
  }
  return rank_locked(std::move(matches), query_terms);
}

std::vector<ScoredChunk> InvertedIndex::query_any(
    const std::vector<std::string>& query_terms) const {
  if (query_terms.empty()) return {};
  std::shared_lock lock(mutex_);

  std::set<std::string> matches;
  for (const std::string& term :
       std::set<std::string>(query_terms.begin(), query_terms.end())) {
    auto it = postings_.find(term);
    if (it == postings_.end()) continue;
    for (const auto& [chunk_ref, posting] : it->second) {
      matches.insert(chunk_ref);
    }
  }
  return rank_locked({matches.begin(), matches.end()}, query_terms);
}

}  // namespace docsearch
