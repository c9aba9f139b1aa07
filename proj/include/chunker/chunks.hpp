#ifndef CHUNKER_CHUNKS_HPP
#define CHUNKER_CHUNKS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chunker {

/// The eleven chunk categories of the shared-task data.
enum class ChunkType : std::uint8_t {
  ADJP,
  ADVP,
  CONJP,
  INTJ,
  LST,
  NP,
  PP,
  PRT,
  SBAR,
  UCP,
  VP,
};

inline constexpr std::size_t kNumChunkTypes = 11;

constexpr std::array<ChunkType, kNumChunkTypes> all_chunk_types() {
  return {ChunkType::ADJP, ChunkType::ADVP, ChunkType::CONJP, ChunkType::INTJ,
          ChunkType::LST,  ChunkType::NP,   ChunkType::PP,    ChunkType::PRT,
          ChunkType::SBAR, ChunkType::UCP,  ChunkType::VP};
}

std::string_view to_string(ChunkType type);
std::optional<ChunkType> chunk_type_from(std::string_view name);

enum class BioKind : std::uint8_t { B, I, O };

/// A per-token chunk tag: B-X, I-X or O. O carries no chunk type.
class BioTag {
 public:
  BioTag() : kind_(BioKind::O), type_(ChunkType::ADJP) {}

  static BioTag outside() { return BioTag(); }
  static BioTag begin(ChunkType type) { return BioTag(BioKind::B, type); }
  static BioTag inside(ChunkType type) { return BioTag(BioKind::I, type); }

  /// Parses the strict text form ("B-NP", "I-VP", "O"); case-sensitive.
  /// Throws ParseError naming the offending tag.
  static BioTag parse(std::string_view text);

  BioKind kind() const { return kind_; }
  bool is_outside() const { return kind_ == BioKind::O; }
  /// Only meaningful when kind() != O.
  ChunkType type() const { return type_; }

  std::string to_string() const;

  friend bool operator==(BioTag a, BioTag b) {
    return a.kind_ == b.kind_ && (a.kind_ == BioKind::O || a.type_ == b.type_);
  }
  friend bool operator!=(BioTag a, BioTag b) { return !(a == b); }

 private:
  BioTag(BioKind kind, ChunkType type) : kind_(kind), type_(type) {}

  BioKind kind_;
  ChunkType type_;
};

/// Total order on a tag's text form ("B-ADJP" < "B-NP" < ... < "I-VP" < "O");
/// the tie-break order used wherever determinism requires one.
bool tag_text_less(BioTag a, BioTag b);

/// A typed half-open token interval [begin, end) within one sentence.
struct ChunkSpan {
  ChunkType type;
  std::size_t begin;
  std::size_t end;

  friend bool operator==(const ChunkSpan&, const ChunkSpan&) = default;
};

/// Tags a sentence of `length` tokens: chunk-initial tokens get B-X, the rest
/// of the span I-X, everything else O. Spans must be sorted, disjoint,
/// non-empty and within range; throws std::invalid_argument otherwise.
std::vector<BioTag> encode_bio(std::span<const ChunkSpan> spans,
                               std::size_t length);

/// Recovers spans from an arbitrary tag sequence. Total: an I-X that does not
/// continue a chunk of type X starts a new chunk, so inconsistent sequences
/// decode without error. Output is sorted and disjoint.
std::vector<ChunkSpan> decode_bio(std::span<const BioTag> tags);

/// Canonicalizes a tag sequence: equals encode_bio(decode_bio(tags), n).
/// Idempotent; consistent input comes back unchanged.
std::vector<BioTag> repair_tags(std::span<const BioTag> tags);

}  // namespace chunker

#endif
