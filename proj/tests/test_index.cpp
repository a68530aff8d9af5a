#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "docsearch/errors.hpp"
#include "docsearch/index.hpp"
#include "test_util.hpp"

using namespace docsearch;
using testutil::OracleCorpus;

namespace {

std::vector<Token> toks(const std::vector<std::string>& terms) {
  std::vector<Token> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out.push_back(Token{terms[i], i, i * 8});
  }
  return out;
}

std::set<std::string> refs_of(const std::vector<ScoredChunk>& scored) {
  std::set<std::string> out;
  for (const auto& s : scored) out.insert(s.chunk_ref);
  return out;
}

void build(InvertedIndex& index, const OracleCorpus& corpus) {
  for (const auto& chunk : corpus) {
    index.add_chunk(chunk.ref, chunk.tokens);
  }
}

}  // namespace

TEST_CASE("add_chunk records postings and stats") {
  InvertedIndex index;
  index.add_chunk("c1", toks({"a", "b", "b"}));
  auto stats = index.stats();
  CHECK(stats.total_chunks == 1);
  CHECK(stats.avg_chunk_length == doctest::Approx(3.0));
  CHECK(stats.chunk_lengths.at("c1") == 3);
  CHECK(index.contains("c1"));

  auto hits = index.query_any({"b"});
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].chunk_ref == "c1");
}

TEST_CASE("duplicate chunk_ref is rejected") {
  InvertedIndex index;
  index.add_chunk("c1", toks({"a"}));
  CHECK_THROWS_AS(index.add_chunk("c1", toks({"b"})), Error);
}

TEST_CASE("avgdl over several chunks") {
  InvertedIndex index;
  index.add_chunk("c1", toks({"a", "b"}));
  index.add_chunk("c2", toks({"a", "b", "c"}));
  index.add_chunk("c3", toks({"a", "b", "c", "d"}));
  CHECK(index.stats().avg_chunk_length == doctest::Approx(3.0));
}

TEST_CASE("remove_chunk inverts add_chunk") {
  InvertedIndex index;
  index.add_chunk("c1", toks({"a", "b"}));
  index.remove_chunk("c1");
  CHECK(index.stats().total_chunks == 0);
  CHECK(index.query_any({"a"}).empty());

  CHECK_THROWS_AS(index.remove_chunk("zz"), Error);

  index.add_chunk("c1", toks({"a", "b"}));
  index.add_chunk("c2", toks({"a", "c"}));
  index.remove_chunk("c1");
  InvertedIndex only_c2;
  only_c2.add_chunk("c2", toks({"a", "c"}));
  CHECK(index.stats().chunk_lengths == only_c2.stats().chunk_lengths);
  CHECK(index.query_any({"a"}) == only_c2.query_any({"a"}));
  CHECK(index.bm25_score({"a"}, "c2") ==
        doctest::Approx(only_c2.bm25_score({"a"}, "c2")));
}

// Frozen from direct scalar evaluation of the scoring formula:
// corpus {c1: "a b b", c2: "a c"}, query {b}, k1=1.2, b=0.75
// IDF = ln 2, f = 2, |D| = 3, avgdl = 2.5, denom = 3.38
TEST_CASE("bm25 matches hand-evaluated formula") {
  InvertedIndex index;
  index.add_chunk("c1", toks({"a", "b", "b"}));
  index.add_chunk("c2", toks({"a", "c"}));

  CHECK(index.bm25_score({"b"}, "c1", {1.2, 0.75}) ==
        doctest::Approx(0.902321773509988).epsilon(1e-12));

  // term present in both chunks uses IDF = ln(1 + 0.5/2.5)
  CHECK(index.bm25_score({"a"}, "c1", {1.2, 0.75}) ==
        doctest::Approx(0.16853253149021016).epsilon(1e-12));
  CHECK(index.bm25_score({"a"}, "c2", {1.2, 0.75}) ==
        doctest::Approx(0.19856803215183175).epsilon(1e-12));
}

TEST_CASE("bm25 of an unseen term is zero") {
  InvertedIndex index;
  index.add_chunk("c1", toks({"a"}));
  CHECK(index.bm25_score({"x"}, "c1") == 0.0);
  CHECK_THROWS_AS(index.bm25_score({"a"}, "nope"), Error);
}

TEST_CASE("idf stays positive when a term is in every chunk") {
  InvertedIndex index;
  index.add_chunk("c1", toks({"a"}));
  index.add_chunk("c2", toks({"a"}));
  CHECK(index.bm25_score({"a"}, "c1") > 0.0);
}

TEST_CASE("phrase query requires adjacency") {
  InvertedIndex index;
  index.add_chunk("c1", toks({"primary", "synchronization", "signal"}));
  index.add_chunk("c2", toks({"signal", "synchronization"}));
  auto hits = index.query_phrase(toks({"synchronization", "signal"}));
  CHECK(refs_of(hits) == std::set<std::string>{"c1"});
}

TEST_CASE("single-token phrase behaves as exact term match") {
  InvertedIndex index;
  index.add_chunk("c1", toks({"a", "b"}));
  index.add_chunk("c2", toks({"b"}));
  CHECK(refs_of(index.query_phrase(toks({"b"}))) ==
        refs_of(index.query_any({"b"})));
}

TEST_CASE("repeated-term phrase") {
  InvertedIndex index;
  index.add_chunk("c1", toks({"a", "b", "b"}));
  index.add_chunk("c2", toks({"b", "a", "b"}));
  auto hits = index.query_phrase(toks({"b", "b"}));
  CHECK(refs_of(hits) == std::set<std::string>{"c1"});
}

TEST_CASE("an indexed stopword gap breaks the phrase") {
  InvertedIndex index;
  // "state of the art" with stopwords removed leaves positions 0 and 3
  index.add_chunk("c1", {{Token{"state", 0, 0}, Token{"art", 3, 17}}});
  CHECK(index.query_phrase(toks({"state", "art"})).empty());
  // a query whose own analysis kept the same gap does match
  std::vector<Token> gapped = {Token{"state", 0, 0}, Token{"art", 3, 17}};
  CHECK(refs_of(index.query_phrase(gapped)) == std::set<std::string>{"c1"});
}

TEST_CASE("query_all intersects, query_any unions") {
  InvertedIndex index;
  index.add_chunk("c1", toks({"a", "b"}));
  index.add_chunk("c2", toks({"a"}));
  CHECK(refs_of(index.query_all({"a", "b"})) == std::set<std::string>{"c1"});
  CHECK(refs_of(index.query_all({"a"})) ==
        std::set<std::string>{"c1", "c2"});
  CHECK(index.query_all({}).empty());
  CHECK(index.query_any({}).empty());

  InvertedIndex index2;
  index2.add_chunk("c1", toks({"a", "b"}));
  index2.add_chunk("c2", toks({"c"}));
  CHECK(refs_of(index2.query_any({"a", "c"})) ==
        std::set<std::string>{"c1", "c2"});
}

TEST_CASE("results are ordered by score desc then chunk_ref asc") {
  InvertedIndex index;
  index.add_chunk("c2", toks({"a"}));
  index.add_chunk("c1", toks({"a"}));
  auto hits = index.query_any({"a"});
  REQUIRE(hits.size() == 2);
  CHECK(hits[0].score == hits[1].score);
  CHECK(hits[0].chunk_ref == "c1");
  CHECK(hits[1].chunk_ref == "c2");
}

TEST_CASE("oracle equivalence on random corpora") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 120; ++iter) {
    auto corpus = testutil::random_corpus(rng);
    InvertedIndex index;
    build(index, corpus);

    // scores match direct formula evaluation
    auto terms = testutil::random_terms(rng);
    for (const auto& chunk : corpus) {
      const double got = index.bm25_score(terms, chunk.ref, {1.2, 0.75});
      const double want =
          testutil::oracle_bm25(corpus, terms, chunk.ref, 1.2, 0.75);
      const double tol = 1e-9 * std::max(1.0, std::abs(want));
      CHECK(std::abs(got - want) <= tol);
    }

    // query modes match brute-force scans
    CHECK(refs_of(index.query_all(terms)) ==
          testutil::oracle_all(corpus, terms));
    CHECK(refs_of(index.query_any(terms)) ==
          testutil::oracle_any(corpus, terms));

    std::vector<Token> phrase;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      phrase.push_back(Token{terms[i], i, i * 8});
    }
    CHECK(refs_of(index.query_phrase(phrase)) ==
          testutil::oracle_phrase(corpus, phrase));

    // monotone containment phrase <= all <= any
    auto p = refs_of(index.query_phrase(phrase));
    auto a = refs_of(index.query_all(terms));
    auto o = refs_of(index.query_any(terms));
    CHECK(std::includes(a.begin(), a.end(), p.begin(), p.end()));
    CHECK(std::includes(o.begin(), o.end(), a.begin(), a.end()));
  }
}

TEST_CASE("add/remove inversion is observationally exact") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 30; ++iter) {
    auto corpus = testutil::random_corpus(rng, 12, 10);
    // build full index, then remove a random subset
    InvertedIndex removed;
    build(removed, corpus);
    OracleCorpus kept;
    for (const auto& chunk : corpus) {
      if (rng() % 2 == 0) {
        removed.remove_chunk(chunk.ref);
      } else {
        kept.push_back(chunk);
      }
    }
    InvertedIndex fresh;
    build(fresh, kept);

    CHECK(removed.stats().chunk_lengths == fresh.stats().chunk_lengths);
    for (int q = 0; q < 10; ++q) {
      auto terms = testutil::random_terms(rng);
      CHECK(removed.query_all(terms) == fresh.query_all(terms));
      CHECK(removed.query_any(terms) == fresh.query_any(terms));
      std::vector<Token> phrase;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        phrase.push_back(Token{terms[i], i, i * 8});
      }
      CHECK(removed.query_phrase(phrase) == fresh.query_phrase(phrase));
    }
  }
}
