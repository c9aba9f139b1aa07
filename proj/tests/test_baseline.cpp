#include "chunker/baseline.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace chunker;

namespace {

// One long sentence pairing each POS with the given tag a number of times.
Corpus counted_corpus(
    const std::vector<std::tuple<std::string, std::string, int>>& triples) {
  Sentence sentence;
  sentence.tags.emplace();
  for (const auto& [pos, tag, count] : triples) {
    for (int i = 0; i < count; ++i) {
      sentence.tokens.push_back(Token{"w", pos});
      sentence.tags->push_back(BioTag::parse(tag));
    }
  }
  Corpus corpus;
  corpus.sentences.push_back(std::move(sentence));
  return corpus;
}

}  // namespace

TEST_SUITE("baseline") {

TEST_CASE("each POS maps to its most frequent tag") {
  const BaselineModel model = BaselineModel::train(
      counted_corpus({{"DT", "B-NP", 10}, {"DT", "I-NP", 3}}));
  CHECK(model.tag_for_pos("DT") == BioTag::begin(ChunkType::NP));
}

TEST_CASE("a POS seen once keeps its single tag") {
  const BaselineModel model =
      BaselineModel::train(counted_corpus({{"XX", "I-VP", 1}}));
  CHECK(model.tag_for_pos("XX") == BioTag::inside(ChunkType::VP));
}

TEST_CASE("ties break toward the lexicographically smaller tag text") {
  const BaselineModel model = BaselineModel::train(counted_corpus(
      {{"TT", "B-VP", 2}, {"TT", "B-NP", 2}, {"ZZ", "O", 1},
       {"ZZ", "B-ADJP", 1}}));
  CHECK(model.tag_for_pos("TT") == BioTag::begin(ChunkType::NP));
  CHECK(model.tag_for_pos("ZZ") == BioTag::begin(ChunkType::ADJP));
}

TEST_CASE("unseen POS tags map to O") {
  const BaselineModel model =
      BaselineModel::train(counted_corpus({{"DT", "B-NP", 1}}));
  Sentence sentence;
  sentence.tokens = {{"a", "Q1"}, {"b", "Q2"}, {"c", "Q3"}};
  CHECK(model.tag(sentence) ==
        std::vector<BioTag>(3, BioTag::outside()));
}

TEST_CASE("tagging is a per-token lookup") {
  const BaselineModel model = BaselineModel::train(
      counted_corpus({{"DT", "B-NP", 1}, {"NN", "I-NP", 1}}));
  Sentence sentence;
  sentence.tokens = {{"the", "DT"}, {"dog", "NN"}};
  CHECK(model.tag(sentence) ==
        std::vector<BioTag>{BioTag::begin(ChunkType::NP),
                            BioTag::inside(ChunkType::NP)});
}

TEST_CASE("output length equals input length and permutes with the input") {
  const BaselineModel model = BaselineModel::train(counted_corpus(
      {{"DT", "B-NP", 2}, {"NN", "I-NP", 2}, {"VB", "B-VP", 2}}));
  std::mt19937 rng(11);
  Sentence sentence;
  const char* pos[] = {"DT", "NN", "VB", "??"};
  for (int i = 0; i < 12; ++i) {
    sentence.tokens.push_back(Token{"w" + std::to_string(i), pos[rng() % 4]});
  }
  const auto tags = model.tag(sentence);
  REQUIRE(tags.size() == sentence.tokens.size());

  Sentence shuffled = sentence;
  std::vector<std::size_t> order(sentence.tokens.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < order.size(); ++i) {
    shuffled.tokens[i] = sentence.tokens[order[i]];
  }
  const auto shuffled_tags = model.tag(shuffled);
  for (std::size_t i = 0; i < order.size(); ++i) {
    CHECK(shuffled_tags[i] == tags[order[i]]);
  }
}

TEST_CASE("training is deterministic") {
  const Corpus corpus = counted_corpus(
      {{"DT", "B-NP", 3}, {"DT", "I-NP", 3}, {"NN", "I-NP", 5}});
  CHECK(BaselineModel::train(corpus) == BaselineModel::train(corpus));
}

TEST_CASE("the model persists as sorted POS/tag lines") {
  const BaselineModel model = BaselineModel::train(counted_corpus(
      {{"NN", "I-NP", 1}, {"DT", "B-NP", 1}, {"VB", "B-VP", 1}}));
  std::ostringstream out;
  model.save(out);
  CHECK(out.str() == "DT\tB-NP\nNN\tI-NP\nVB\tB-VP\n");

  std::istringstream in(out.str());
  CHECK(BaselineModel::load(in) == model);
}

TEST_CASE("training rejects unusable corpora") {
  CHECK_THROWS_AS(BaselineModel::train(Corpus{}), std::invalid_argument);
  Corpus untagged;
  untagged.sentences.push_back(Sentence{{{"a", "DT"}}, std::nullopt});
  CHECK_THROWS_AS(BaselineModel::train(untagged), std::invalid_argument);
}

}  // TEST_SUITE
