#ifndef CHUNKER_PTB_HPP
#define CHUNKER_PTB_HPP

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chunker {

/// A Treebank II bracket label, decomposed: "NP-SBJ-3" has category "NP",
/// function tags {SBJ} and coindex 3. "=n" gap indices are kept separately
/// and ignored downstream. The pseudo-categories -NONE-, -LRB-, ... keep
/// their leading dash and are never decomposed.
struct ConstituentLabel {
  std::string category;
  std::vector<std::string> function_tags;  // unique, in input order
  std::optional<int> coindex;
  std::optional<int> gap_index;

  bool has_function_tag(std::string_view tag) const;
  /// Reassembles the raw label text (category-TAGS-coindex=gap).
  std::string to_string() const;

  friend bool operator==(const ConstituentLabel&,
                         const ConstituentLabel&) = default;
};

/// Decomposes a raw bracket label. Total on non-empty input: the category is
/// the text before the first '-' or '=', numeric '-' suffixes become the
/// coindex, alphabetic ones function tags, '=' suffixes the gap index.
ConstituentLabel split_label(std::string_view raw);

/// A constituent tree: internal nodes carry a decomposed label and at least
/// one child; terminals carry a POS tag and a word.
class TreeNode {
 public:
  static TreeNode internal(ConstituentLabel label,
                           std::vector<TreeNode> children);
  static TreeNode terminal(std::string pos, std::string word);

  bool is_terminal() const { return terminal_; }
  const ConstituentLabel& label() const { return label_; }
  const std::vector<TreeNode>& children() const { return children_; }
  const std::string& pos() const { return pos_; }
  const std::string& word() const { return word_; }

  /// Left-to-right terminal sequence.
  std::vector<const TreeNode*> terminals() const;
  std::size_t yield_size() const;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;

 private:
  TreeNode() = default;

  bool terminal_ = false;
  ConstituentLabel label_;
  std::vector<TreeNode> children_;
  std::string pos_;
  std::string word_;
};

/// Parses a stream of Treebank II S-expressions, one TreeNode per top-level
/// tree. An unlabeled wrapper "( ... )" around a single tree is removed; a
/// wrapper around several children becomes a TOP node. Throws ParseError
/// with line/column on unbalanced input, empty constituents, or a terminal
/// without a word.
std::vector<TreeNode> parse_trees(std::istream& input);
std::vector<TreeNode> parse_trees(std::string_view text);

/// Convenience for feeding a single tree; throws if the text does not hold
/// exactly one.
TreeNode parse_tree(std::string_view text);

/// Removes -NONE- terminals and any internal node left childless. Returns
/// nullopt when nothing survives. The order of surviving terminals is
/// unchanged.
std::optional<TreeNode> strip_null_elements(const TreeNode& tree);

/// Prints the bracketed text form; parse_trees on the result reproduces the
/// tree.
std::string print_tree(const TreeNode& tree);

}  // namespace chunker

#endif
