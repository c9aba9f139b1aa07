#include "chunker/chunks.hpp"

#include <stdexcept>

#include "chunker/error.hpp"

namespace chunker {

namespace {

constexpr std::array<std::string_view, kNumChunkTypes> kTypeNames = {
    "ADJP", "ADVP", "CONJP", "INTJ", "LST", "NP", "PP", "PRT", "SBAR", "UCP",
    "VP"};

}  // namespace

std::string_view to_string(ChunkType type) {
  return kTypeNames[static_cast<std::size_t>(type)];
}

std::optional<ChunkType> chunk_type_from(std::string_view name) {
  for (std::size_t i = 0; i < kNumChunkTypes; ++i) {
    if (kTypeNames[i] == name) return static_cast<ChunkType>(i);
  }
  return std::nullopt;
}

BioTag BioTag::parse(std::string_view text) {
  if (text == "O") return outside();
  if (text.size() >= 3 && (text[0] == 'B' || text[0] == 'I') &&
      text[1] == '-') {
    if (auto type = chunk_type_from(text.substr(2))) {
      return text[0] == 'B' ? begin(*type) : inside(*type);
    }
  }
  throw ParseError("unknown chunk tag '" + std::string(text) + "'");
}

std::string BioTag::to_string() const {
  switch (kind_) {
    case BioKind::O:
      return "O";
    case BioKind::B:
      return "B-" + std::string(chunker::to_string(type_));
    case BioKind::I:
      return "I-" + std::string(chunker::to_string(type_));
  }
  return "O";
}

bool tag_text_less(BioTag a, BioTag b) { return a.to_string() < b.to_string(); }

std::vector<BioTag> encode_bio(std::span<const ChunkSpan> spans,
                               std::size_t length) {
  std::vector<BioTag> tags(length, BioTag::outside());
  std::size_t previous_end = 0;
  bool first = true;
  for (const ChunkSpan& span : spans) {
    if (span.begin >= span.end) {
      throw std::invalid_argument("empty chunk span");
    }
    if (!first && span.begin < previous_end) {
      throw std::invalid_argument("chunk spans overlap or are unsorted");
    }
    if (span.end > length) {
      throw std::invalid_argument("chunk span exceeds sentence length");
    }
    tags[span.begin] = BioTag::begin(span.type);
    for (std::size_t i = span.begin + 1; i < span.end; ++i) {
      tags[i] = BioTag::inside(span.type);
    }
    previous_end = span.end;
    first = false;
  }
  return tags;
}

std::vector<ChunkSpan> decode_bio(std::span<const BioTag> tags) {
  std::vector<ChunkSpan> spans;
  bool open = false;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const BioTag tag = tags[i];
    if (tag.is_outside()) {
      open = false;
      continue;
    }
    // I-X continues the current chunk only when it follows B-X or I-X of the
    // same type; anything else starts a new chunk (the repair rule).
    const bool continues = tag.kind() == BioKind::I && open &&
                           spans.back().type == tag.type() &&
                           spans.back().end == i;
    if (continues) {
      spans.back().end = i + 1;
    } else {
      spans.push_back({tag.type(), i, i + 1});
      open = true;
    }
  }
  return spans;
}

std::vector<BioTag> repair_tags(std::span<const BioTag> tags) {
  return encode_bio(decode_bio(tags), tags.size());
}

}  // namespace chunker
