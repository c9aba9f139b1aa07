#ifndef CHUNKER_TREE2CHUNK_HPP
#define CHUNKER_TREE2CHUNK_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chunker/chunks.hpp"
#include "chunker/conll_io.hpp"
#include "chunker/ptb.hpp"

namespace chunker {

/// Head-finding preferences for one constituent category. `groups` is an
/// ordered precedence list: earlier groups win, and within a group the
/// children are scanned in `direction` for the first match. An entry names
/// either a POS tag (matches a terminal child) or a child category (the
/// search descends into that child). Two wildcards: "*" matches any terminal
/// except punctuation and CC, "**" matches any terminal at all.
///
/// The VP entry is interpreted by the verb-cluster logic instead of the
/// generic scan: its first group lists the complement categories the cluster
/// may extend through, the second the verb tags, the third the noun tags
/// admissible as a last-resort VP head.
struct HeadRule {
  enum class Direction { Left, Right };

  Direction direction = Direction::Right;
  std::vector<std::vector<std::string>> groups;
};

class HeadRuleTable {
 public:
  /// The rule set shipped with the toolkit; covers every chunk category.
  static HeadRuleTable standard();

  const HeadRule* find(const std::string& category) const;
  void set(std::string category, HeadRule rule);

 private:
  std::vector<std::pair<std::string, HeadRule>> entries_;
};

/// The chunk type a constituent category produces, if any. WH categories
/// fold into their plain counterparts (WHNP -> NP etc.).
std::optional<ChunkType> chunk_type_for_category(std::string_view category);

/// Position (within the node's own yield) of the node's head terminal.
/// Total: when no rule matches, the rightmost terminal is returned and a
/// diagnostic recorded. For VP the result is the last verb of the merged
/// verb cluster, descending through nested VP/S complements.
std::size_t find_head(const TreeNode& node, const HeadRuleTable& rules,
                      std::vector<std::string>* diagnostics = nullptr);

/// A sentence's tokens together with its chunk segmentation.
struct ChunkedSentence {
  std::vector<Token> tokens;
  std::vector<ChunkSpan> spans;

  friend bool operator==(const ChunkedSentence&,
                         const ChunkedSentence&) = default;
};

/// Converts one null-stripped tree into chunks. Chunks never overlap: the
/// tree is traversed top-down and a constituent's chunk runs from its
/// leftmost still-unclaimed token through its head token. Never throws;
/// constituents without a usable head leave their tokens outside all chunks
/// and record a diagnostic.
ChunkedSentence extract_chunks(const TreeNode& tree, const HeadRuleTable& rules,
                               std::vector<std::string>* diagnostics = nullptr);

/// strip_null_elements + extract_chunks + encode_bio over a tree sequence.
/// Trees that are empty after stripping are dropped with a diagnostic.
Corpus chunk_corpus(std::span<const TreeNode> trees, const HeadRuleTable& rules,
                    std::vector<std::string>* diagnostics = nullptr);

/// "[NP He] [VP reckons] ." — the bracketed rendering used in tests and
/// debugging output.
std::string format_bracketed(const ChunkedSentence& sentence);

}  // namespace chunker

#endif
