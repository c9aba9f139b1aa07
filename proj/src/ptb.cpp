#include "chunker/ptb.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <utility>

#include "chunker/error.hpp"

namespace chunker {

bool ConstituentLabel::has_function_tag(std::string_view tag) const {
  return std::find(function_tags.begin(), function_tags.end(), tag) !=
         function_tags.end();
}

std::string ConstituentLabel::to_string() const {
  std::string out = category;
  for (const std::string& tag : function_tags) {
    out += '-';
    out += tag;
  }
  if (coindex) out += '-' + std::to_string(*coindex);
  if (gap_index) out += '=' + std::to_string(*gap_index);
  return out;
}

ConstituentLabel split_label(std::string_view raw) {
  ConstituentLabel label;
  // -NONE-, -LRB-, -RRB- and friends are atomic: a leading dash is part of
  // the category, never a separator.
  if (!raw.empty() && raw.front() == '-') {
    label.category = std::string(raw);
    return label;
  }
  std::size_t i = raw.find_first_of("-=");
  label.category = std::string(raw.substr(0, i));
  while (i != std::string_view::npos && i < raw.size()) {
    const char separator = raw[i];
    const std::size_t start = i + 1;
    i = raw.find_first_of("-=", start);
    const std::string_view part =
        raw.substr(start, i == std::string_view::npos ? i : i - start);
    if (part.empty()) continue;
    const bool numeric =
        part.size() <= 9 &&
        std::all_of(part.begin(), part.end(),
                    [](unsigned char c) { return std::isdigit(c); });
    if (numeric) {
      const int value = std::stoi(std::string(part));
      if (separator == '=') {
        label.gap_index = value;
      } else {
        label.coindex = value;
      }
    } else if (!label.has_function_tag(part)) {
      label.function_tags.emplace_back(part);
    }
  }
  return label;
}

TreeNode TreeNode::internal(ConstituentLabel label,
                            std::vector<TreeNode> children) {
  TreeNode node;
  node.terminal_ = false;
  node.label_ = std::move(label);
  node.children_ = std::move(children);
  return node;
}

TreeNode TreeNode::terminal(std::string pos, std::string word) {
  TreeNode node;
  node.terminal_ = true;
  node.pos_ = std::move(pos);
  node.word_ = std::move(word);
  return node;
}

std::vector<const TreeNode*> TreeNode::terminals() const {
  std::vector<const TreeNode*> out;
  if (terminal_) {
    out.push_back(this);
    return out;
  }
  for (const TreeNode& child : children_) {
    if (child.is_terminal()) {
      out.push_back(&child);
    } else {
      auto sub = child.terminals();
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  return out;
}

std::size_t TreeNode::yield_size() const {
  if (terminal_) return 1;
  std::size_t n = 0;
  for (const TreeNode& child : children_) n += child.yield_size();
  return n;
}

namespace {

class SExprParser {
 public:
  explicit SExprParser(std::string_view text) : text_(text) {}

  std::vector<TreeNode> parse_all() {
    std::vector<TreeNode> trees;
    skip_space();
    while (pos_ < text_.size()) {
      trees.push_back(parse_top());
      skip_space();
    }
    return trees;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view read_atom() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  // A top-level expression; strips the Treebank's unlabeled wrapper.
  TreeNode parse_top() {
    if (text_[pos_] != '(') fail("expected '('");
    const std::size_t open = pos_;
    ++pos_;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      // Unlabeled wrapper: parse the children, unwrap a single one.
      std::vector<TreeNode> children;
      while (true) {
        skip_space();
        if (pos_ >= text_.size()) {
          pos_ = open;
          fail("unbalanced '('");
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        children.push_back(parse_node());
      }
      if (children.empty()) {
        pos_ = open;
        fail("empty constituent");
      }
      if (children.size() == 1) return std::move(children.front());
      return TreeNode::internal(split_label("TOP"), std::move(children));
    }
    pos_ = open;
    return parse_node();
  }

  TreeNode parse_node() {
    if (text_[pos_] != '(') fail("expected '('");
    const std::size_t open = pos_;
    ++pos_;
    skip_space();
    if (pos_ >= text_.size()) {
      pos_ = open;
      fail("unbalanced '('");
    }
    if (text_[pos_] == ')') {
      pos_ = open;
      fail("empty constituent");
    }
    if (text_[pos_] == '(') {
      pos_ = open;
      fail("constituent without a label");
    }
    const std::string label(read_atom());

    std::vector<TreeNode> subtrees;
    std::string word;
    bool has_word = false;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        pos_ = open;
        fail("unbalanced '('");
      }
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      if (text_[pos_] == '(') {
        if (has_word) fail("word and subtree mixed under '" + label + "'");
        subtrees.push_back(parse_node());
      } else {
        if (!subtrees.empty()) {
          fail("bare word beside subtrees under '" + label + "'");
        }
        if (has_word) fail("more than one word under '" + label + "'");
        word = std::string(read_atom());
        has_word = true;
      }
    }
    if (has_word) return TreeNode::terminal(label, std::move(word));
    if (subtrees.empty()) {
      pos_ = open;
      fail("terminal '" + label + "' without a word");
    }
    return TreeNode::internal(split_label(label), std::move(subtrees));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_node(const TreeNode& node, std::string& out) {
  if (node.is_terminal()) {
    out += '(';
    out += node.pos();
    out += ' ';
    out += node.word();
    out += ')';
    return;
  }
  out += '(';
  out += node.label().to_string();
  for (const TreeNode& child : node.children()) {
    out += ' ';
    print_node(child, out);
  }
  out += ')';
}

}  // namespace

std::vector<TreeNode> parse_trees(std::string_view text) {
  return SExprParser(text).parse_all();
}

std::vector<TreeNode> parse_trees(std::istream& input) {
  std::ostringstream buffer;
  buffer << input.rdbuf();
  const std::string text = buffer.str();
  return parse_trees(std::string_view(text));
}

TreeNode parse_tree(std::string_view text) {
  std::vector<TreeNode> trees = parse_trees(text);
  if (trees.size() != 1) {
    throw ParseError("expected exactly one tree, got " +
                     std::to_string(trees.size()));
  }
  return std::move(trees.front());
}

std::optional<TreeNode> strip_null_elements(const TreeNode& tree) {
  if (tree.is_terminal()) {
    if (tree.pos() == "-NONE-") return std::nullopt;
    return tree;
  }
  std::vector<TreeNode> kept;
  for (const TreeNode& child : tree.children()) {
    if (auto stripped = strip_null_elements(child)) {
      kept.push_back(std::move(*stripped));
    }
  }
  if (kept.empty()) return std::nullopt;
  return TreeNode::internal(tree.label(), std::move(kept));
}

std::string print_tree(const TreeNode& tree) {
  std::string out;
  print_node(tree, out);
  return out;
}

}  // namespace chunker
