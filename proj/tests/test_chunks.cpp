#include "chunker/chunks.hpp"

#include <doctest.h>

#include <random>
#include <vector>

#include "chunker/error.hpp"

using namespace chunker;

namespace {

std::vector<BioTag> tags_of(const std::vector<const char*>& texts) {
  std::vector<BioTag> tags;
  for (const char* text : texts) tags.push_back(BioTag::parse(text));
  return tags;
}

// The 5-letter alphabet used by the exhaustive enumerations.
const std::vector<BioTag> kTwoTypeAlphabet = {
    BioTag::outside(), BioTag::begin(ChunkType::NP),
    BioTag::inside(ChunkType::NP), BioTag::begin(ChunkType::VP),
    BioTag::inside(ChunkType::VP)};

}  // namespace

TEST_SUITE("chunks") {

TEST_CASE("chunk type names round-trip") {
  for (ChunkType type : all_chunk_types()) {
    CHECK(chunk_type_from(to_string(type)) == type);
  }
  CHECK(!chunk_type_from("XP"));
  CHECK(!chunk_type_from("np"));
  CHECK(!chunk_type_from(""));
}

TEST_CASE("tag text forms") {
  CHECK(BioTag::parse("B-NP") == BioTag::begin(ChunkType::NP));
  CHECK(BioTag::parse("I-VP") == BioTag::inside(ChunkType::VP));
  CHECK(BioTag::parse("O") == BioTag::outside());
  CHECK(BioTag::begin(ChunkType::SBAR).to_string() == "B-SBAR");
  CHECK(BioTag::outside().to_string() == "O");

  for (const char* bad : {"B-XX", "b-np", "B", "I-", "BNP", "X-NP", "o", ""}) {
    CHECK_THROWS_AS(BioTag::parse(bad), ParseError);
  }
  CHECK_THROWS_WITH_AS(BioTag::parse("B-XYZ"),
                       "unknown chunk tag 'B-XYZ'", ParseError);
}

TEST_CASE("tag ordering follows the text form") {
  CHECK(tag_text_less(BioTag::begin(ChunkType::ADJP),
                      BioTag::begin(ChunkType::NP)));
  CHECK(tag_text_less(BioTag::begin(ChunkType::VP),
                      BioTag::inside(ChunkType::ADJP)));
  CHECK(tag_text_less(BioTag::inside(ChunkType::VP), BioTag::outside()));
  CHECK(!tag_text_less(BioTag::outside(), BioTag::begin(ChunkType::ADJP)));
}

TEST_CASE("encode_bio tags chunk-initial words B and the rest I") {
  const std::vector<ChunkSpan> spans = {{ChunkType::NP, 0, 1},
                                        {ChunkType::VP, 1, 2},
                                        {ChunkType::NP, 2, 6}};
  CHECK(encode_bio(spans, 6) ==
        tags_of({"B-NP", "B-VP", "B-NP", "I-NP", "I-NP", "I-NP"}));
}

TEST_CASE("encode_bio with no spans is all O") {
  CHECK(encode_bio({}, 3) == tags_of({"O", "O", "O"}));
}

TEST_CASE("encode_bio restarts adjacent same-type chunks with B") {
  const std::vector<ChunkSpan> spans = {{ChunkType::VP, 0, 2},
                                        {ChunkType::VP, 2, 3}};
  CHECK(encode_bio(spans, 3) == tags_of({"B-VP", "I-VP", "B-VP"}));
}

TEST_CASE("encode_bio rejects invalid span sets") {
  CHECK_THROWS_AS(encode_bio({{{ChunkType::NP, 0, 2}, {ChunkType::VP, 1, 3}}},
                             3),
                  std::invalid_argument);
  CHECK_THROWS_AS(encode_bio({{{ChunkType::NP, 0, 4}}}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(encode_bio({{{ChunkType::NP, 2, 2}}}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(encode_bio({{{ChunkType::VP, 2, 3}, {ChunkType::NP, 0, 1}}},
                             3),
                  std::invalid_argument);
}

TEST_CASE("decode_bio on a consistent sequence") {
  CHECK(decode_bio(tags_of({"B-NP", "I-NP", "O", "B-VP"})) ==
        std::vector<ChunkSpan>{{ChunkType::NP, 0, 2}, {ChunkType::VP, 3, 4}});
}

TEST_CASE("decode_bio starts a chunk at an orphaned I tag") {
  CHECK(decode_bio(tags_of({"O", "I-NP", "I-NP"})) ==
        std::vector<ChunkSpan>{{ChunkType::NP, 1, 3}});
  CHECK(decode_bio(tags_of({"I-NP", "I-VP"})) ==
        std::vector<ChunkSpan>{{ChunkType::NP, 0, 1}, {ChunkType::VP, 1, 2}});
  CHECK(decode_bio({}).empty());
}

TEST_CASE("repair_tags rewrites orphaned I tags to B") {
  CHECK(repair_tags(tags_of({"O", "I-NP", "I-NP"})) ==
        tags_of({"O", "B-NP", "I-NP"}));
  CHECK(repair_tags(tags_of({"I-PP"})) == tags_of({"B-PP"}));

  const auto consistent = tags_of({"B-NP", "I-NP", "O", "B-VP", "I-VP"});
  CHECK(repair_tags(consistent) == consistent);
}

TEST_CASE("codec properties hold on all short two-type sequences") {
  // Every tag sequence of length <= 4 over {NP, VP}: 5 + 25 + 125 + 625.
  std::vector<std::vector<BioTag>> sequences = {{}};
  for (int length = 1; length <= 4; ++length) {
    std::vector<std::vector<BioTag>> next;
    for (const auto& sequence : sequences) {
      if (sequence.size() + 1 < static_cast<std::size_t>(length)) continue;
      for (const BioTag tag : kTwoTypeAlphabet) {
        auto extended = sequence;
        extended.push_back(tag);
        next.push_back(std::move(extended));
      }
    }
    // Keep all lengths seen so far plus the new ones.
    sequences.insert(sequences.end(), next.begin(), next.end());
  }

  for (const auto& tags : sequences) {
    const auto spans = decode_bio(tags);
    std::size_t previous_end = 0;
    for (const ChunkSpan& span : spans) {
      CHECK(span.begin < span.end);
      CHECK(span.begin >= previous_end);  // sorted and disjoint
      CHECK(span.end <= tags.size());
      previous_end = span.end;
    }
    CHECK(decode_bio(encode_bio(spans, tags.size())) == spans);

    const auto repaired = repair_tags(tags);
    CHECK(repair_tags(repaired) == repaired);
    CHECK(decode_bio(repaired) == spans);
  }
}

TEST_CASE("random span sets survive an encode/decode round trip") {
  std::mt19937 rng(20001031);
  for (int round = 0; round < 2000; ++round) {
    const std::size_t length = 1 + rng() % 12;
    std::vector<ChunkSpan> spans;
    std::size_t position = 0;
    while (position < length) {
      if (rng() % 2 == 0) {
        const std::size_t end = position + 1 + rng() % (length - position);
        spans.push_back({static_cast<ChunkType>(rng() % kNumChunkTypes),
                         position, end});
        position = end;
      } else {
        ++position;
      }
    }
    CHECK(decode_bio(encode_bio(spans, length)) == spans);
  }
}

}  // TEST_SUITE
