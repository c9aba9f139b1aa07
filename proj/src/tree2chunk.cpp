#include "chunker/tree2chunk.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace chunker {

namespace {

// Tags that never serve as a "*" wildcard head: punctuation and ordinary
// coordinating conjunctions.
const std::unordered_set<std::string> kNeverHead = {
    "CC", ",", ".", ":", "``", "''", "-LRB-", "-RRB-"};

// Adverb-like terminals that may sit between the verbs of one cluster
// without breaking it ("may not want", "could very well show").
const std::unordered_set<std::string> kClusterAdverbTags = {"RB", "RBR", "RBS",
                                                            "UH"};

bool contains_category(const TreeNode& node,
                       const std::unordered_set<std::string>& categories) {
  if (node.is_terminal()) return false;
  if (categories.count(node.label().category) > 0) return true;
  for (const TreeNode& child : node.children()) {
    if (contains_category(child, categories)) return true;
  }
  return false;
}

const std::unordered_set<std::string> kNominalCategories = {"NP", "WHNP",
                                                            "NAC", "NX"};

// An element that a verb cluster may absorb on its way to the main verb.
bool assimilable_in_cluster(const TreeNode& child) {
  if (child.is_terminal()) return kClusterAdverbTags.count(child.pos()) > 0;
  return child.label().category == "ADVP" &&
         !contains_category(child, kNominalCategories);
}

std::vector<std::size_t> child_offsets(const TreeNode& node) {
  std::vector<std::size_t> offsets;
  offsets.reserve(node.children().size());
  std::size_t position = 0;
  for (const TreeNode& child : node.children()) {
    offsets.push_back(position);
    position += child.yield_size();
  }
  return offsets;
}

bool terminal_matches(const TreeNode& terminal, const std::string& item) {
  if (item == "**") return true;
  if (item == "*") return kNeverHead.count(terminal.pos()) == 0;
  return terminal.pos() == item;
}

std::optional<std::size_t> try_head(const TreeNode& node,
                                    const HeadRuleTable& rules);

// Precedence-group scan over the direct children.
std::optional<std::size_t> generic_head(const TreeNode& node,
                                        const HeadRule& rule,
                                        const HeadRuleTable& rules) {
  const std::vector<TreeNode>& children = node.children();
  const std::vector<std::size_t> offsets = child_offsets(node);

  auto match_child = [&](std::size_t index,
                         const std::vector<std::string>& group)
      -> std::optional<std::size_t> {
    const TreeNode& child = children[index];
    for (const std::string& item : group) {
      if (child.is_terminal()) {
        if (terminal_matches(child, item)) return offsets[index];
      } else if (child.label().category == item) {
        if (auto sub = try_head(child, rules)) return offsets[index] + *sub;
      }
    }
    return std::nullopt;
  };

  for (const std::vector<std::string>& group : rule.groups) {
    if (rule.direction == HeadRule::Direction::Right) {
      for (std::size_t i = children.size(); i-- > 0;) {
        if (auto head = match_child(i, group)) return head;
      }
    } else {
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (auto head = match_child(i, group)) return head;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> vp_cluster_head(const TreeNode& node,
                                           const HeadRuleTable& rules);

// Follows the cluster into a VP or S complement. Inside an S, only a clause
// whose surviving material starts with the VP continues the cluster; a
// subject, "not" or anything else directly under S breaks it.
std::optional<std::size_t> descend_complement(const TreeNode& child,
                                              const HeadRuleTable& rules) {
  if (child.label().category == "VP") return vp_cluster_head(child, rules);
  const std::vector<TreeNode>& grandchildren = child.children();
  if (grandchildren.empty()) return std::nullopt;
  const TreeNode& first = grandchildren.front();
  if (first.is_terminal() || first.label().category != "VP") {
    return std::nullopt;
  }
  return vp_cluster_head(first, rules);
}

// The last verb of the merged verb cluster: auxiliaries and nested VP (or
// VP-initial S) complements collapse into one chunk region whose head is the
// innermost main verb. NN/NNS are admissible heads for otherwise verbless
// VPs.
std::optional<std::size_t> vp_cluster_head(const TreeNode& node,
                                           const HeadRuleTable& rules) {
  const HeadRule* rule = rules.find("VP");
  if (rule == nullptr || rule->groups.size() < 3) return std::nullopt;
  const std::vector<std::string>& complements = rule->groups[0];
  const std::vector<std::string>& verb_tags = rule->groups[1];
  const std::vector<std::string>& noun_tags = rule->groups[2];

  auto in = [](const std::vector<std::string>& items, const std::string& s) {
    return std::find(items.begin(), items.end(), s) != items.end();
  };

  const std::vector<TreeNode>& children = node.children();
  const std::vector<std::size_t> offsets = child_offsets(node);

  std::optional<std::size_t> complement;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!children[i].is_terminal() &&
        in(complements, children[i].label().category)) {
      complement = i;
      break;
    }
  }

  std::optional<std::size_t> verb;
  const std::size_t verb_limit = complement ? *complement : children.size();
  for (std::size_t i = 0; i < verb_limit; ++i) {
    if (children[i].is_terminal() && in(verb_tags, children[i].pos())) {
      verb = i;
    }
  }

  auto all_assimilable = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      if (!assimilable_in_cluster(children[i])) return false;
    }
    return true;
  };

  if (verb) {
    if (complement && all_assimilable(*verb + 1, *complement)) {
      if (auto head = descend_complement(children[*complement], rules)) {
        return offsets[*complement] + *head;
      }
    }
    return offsets[*verb];
  }
  if (complement && all_assimilable(0, *complement)) {
    if (auto head = descend_complement(children[*complement], rules)) {
      return offsets[*complement] + *head;
    }
  }
  for (std::size_t i = children.size(); i-- > 0;) {
    if (children[i].is_terminal() && in(noun_tags, children[i].pos())) {
      return offsets[i];
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> try_head(const TreeNode& node,
                                    const HeadRuleTable& rules) {
  if (node.is_terminal()) return 0;
  const std::string& category = node.label().category;
  if (chunk_type_for_category(category) == ChunkType::VP) {
    return vp_cluster_head(node, rules);
  }
  const HeadRule* rule = rules.find(category);
  if (rule == nullptr) return std::nullopt;
  return generic_head(node, *rule, rules);
}

class Extractor {
 public:
  Extractor(const TreeNode& root, const HeadRuleTable& rules,
            std::vector<std::string>* diagnostics)
      : rules_(rules), diagnostics_(diagnostics) {
    for (const TreeNode* terminal : root.terminals()) {
      tokens_.push_back(Token{terminal->word(), terminal->pos()});
    }
    claimed_.assign(tokens_.size(), false);
  }

  ChunkedSentence run(const TreeNode& root) {
    visit(root, 0);
    std::sort(spans_.begin(), spans_.end(),
              [](const ChunkSpan& a, const ChunkSpan& b) {
                return a.begin < b.begin;
              });
    return ChunkedSentence{std::move(tokens_), std::move(spans_)};
  }

 private:
  void diagnose(std::string message) {
    if (diagnostics_ != nullptr) diagnostics_->push_back(std::move(message));
  }

  // Categories whose subtrees the claim of `category` may not extend across.
  std::unordered_set<std::string> barriers_for(
      const std::string& category) const {
    const auto type = chunk_type_for_category(category);
    if (type == ChunkType::NP || category == "NAC" || category == "NX") {
      return {"NAC", "NX"};
    }
    if (type == ChunkType::UCP) {
      std::unordered_set<std::string> all = kNominalCategories;
      for (const char* cat :
           {"VP", "PP", "WHPP", "ADVP", "WHADVP", "ADJP", "WHADJP", "SBAR",
            "PRT", "CONJP", "INTJ", "LST", "UCP"}) {
        all.insert(cat);
      }
      return all;
    }
    return kNominalCategories;
  }

  void mark_barriers(const TreeNode& node, std::size_t first,
                     const std::unordered_set<std::string>& barriers,
                     std::vector<bool>& mask) const {
    std::size_t position = first;
    for (const TreeNode& child : node.children()) {
      const std::size_t width = child.yield_size();
      if (!child.is_terminal()) {
        if (barriers.count(child.label().category) > 0) {
          for (std::size_t i = 0; i < width; ++i) mask[position + i] = true;
        } else {
          mark_barriers(child, position, barriers, mask);
        }
      }
      position += width;
    }
  }

  // The head-bounded claim: from the constituent's head token leftward over
  // unclaimed, barrier-free tokens. NP claims split in front of every
  // possessive marker. `emit` is empty for NAC/NX, which claim but produce
  // no chunk.
  void claim(const TreeNode& node, std::size_t first,
             std::optional<ChunkType> emit) {
    const auto local_head = try_head(node, rules_);
    if (!local_head) {
      diagnose("no head found for '" + node.label().category +
               "' constituent; leaving its tokens outside");
      return;
    }
    const std::size_t head = first + *local_head;
    if (claimed_[head]) return;

    std::vector<bool> barrier(tokens_.size(), false);
    mark_barriers(node, first, barriers_for(node.label().category), barrier);

    std::size_t start = head;
    while (start > first && !claimed_[start - 1] && !barrier[start - 1]) {
      --start;
    }

    if (emit == ChunkType::NP) {
      std::size_t piece = start;
      for (std::size_t i = start + 1; i <= head; ++i) {
        if (tokens_[i].pos == "POS") {
          spans_.push_back({ChunkType::NP, piece, i});
          piece = i;
        }
      }
      spans_.push_back({ChunkType::NP, piece, head + 1});
    } else if (emit) {
      spans_.push_back({*emit, start, head + 1});
    }
    for (std::size_t i = start; i <= head; ++i) claimed_[i] = true;
  }

  void visit(const TreeNode& node, std::size_t first) {
    if (node.is_terminal()) return;
    const std::string& category = node.label().category;
    if (auto type = chunk_type_for_category(category)) {
      claim(node, first, *type);
    } else if (category == "NAC" || category == "NX") {
      claim(node, first, std::nullopt);
    }
    std::size_t position = first;
    for (const TreeNode& child : node.children()) {
      visit(child, position);
      position += child.yield_size();
    }
  }

  const HeadRuleTable& rules_;
  std::vector<std::string>* diagnostics_;
  std::vector<Token> tokens_;
  std::vector<bool> claimed_;
  std::vector<ChunkSpan> spans_;
};

}  // namespace

HeadRuleTable HeadRuleTable::standard() {
  using Direction = HeadRule::Direction;
  HeadRuleTable table;

  const HeadRule np{Direction::Right,
                    {{"NN", "NNS", "POS", "JJR"},
                     {"QP"},
                     {"CD"},
                     {"JJ", "JJS", "RB", "$", "ADJP"},
                     {"*"}}};
  table.set("NP", np);
  table.set("WHNP", np);
  table.set("NAC", np);
  table.set("NX", np);

  // Interpreted by the verb-cluster logic: complement categories, verb tags,
  // noun tags admissible as heads of verbless VPs.
  table.set("VP", HeadRule{Direction::Left,
                           {{"VP", "S"},
                            {"MD", "VBZ", "VBP", "VBD", "VBN", "VBG", "VB",
                             "TO"},
                            {"NN", "NNS"}}});

  const HeadRule pp{Direction::Right, {{"IN", "TO", "RP", "VBG", "VBN", "FW"}}};
  table.set("PP", pp);
  table.set("WHPP", pp);

  const HeadRule advp{Direction::Right,
                      {{"RB", "RBR", "RBS", "WRB", "FW", "JJ", "JJR", "JJS",
                        "NN", "NNS", "CD", "RP"},
                       {"*"}}};
  table.set("ADVP", advp);
  table.set("WHADVP", advp);

  const HeadRule adjp{Direction::Right,
                      {{"JJ", "JJR", "JJS", "VBN", "VBG", "RB", "RBR", "FW",
                        "NN", "NNS", "CD", "$"},
                       {"*"}}};
  table.set("ADJP", adjp);
  table.set("WHADJP", adjp);

  table.set("SBAR", HeadRule{Direction::Right, {{"IN", "NN"}}});
  table.set("PRT", HeadRule{Direction::Right, {{"RP", "RB", "IN"}, {"*"}}});
  table.set("CONJP",
            HeadRule{Direction::Right, {{"RB", "IN", "TO", "CC"}, {"*"}}});
  table.set("INTJ", HeadRule{Direction::Right, {{"*"}}});
  table.set("LST", HeadRule{Direction::Right, {{"**"}}});
  table.set("UCP", HeadRule{Direction::Right, {{"CC"}}});
  table.set("QP", HeadRule{Direction::Right,
                           {{"CD", "NN", "NNS"},
                            {"JJ", "JJR", "JJS", "RB", "DT", "PDT"},
                            {"*"}}});
  return table;
}

const HeadRule* HeadRuleTable::find(const std::string& category) const {
  for (const auto& [name, rule] : entries_) {
    if (name == category) return &rule;
  }
  return nullptr;
}

void HeadRuleTable::set(std::string category, HeadRule rule) {
  for (auto& [name, existing] : entries_) {
    if (name == category) {
      existing = std::move(rule);
      return;
    }
  }
  entries_.emplace_back(std::move(category), std::move(rule));
}

std::optional<ChunkType> chunk_type_for_category(std::string_view category) {
  if (auto direct = chunk_type_from(category)) return direct;
  if (category == "WHNP") return ChunkType::NP;
  if (category == "WHPP") return ChunkType::PP;
  if (category == "WHADVP") return ChunkType::ADVP;
  if (category == "WHADJP") return ChunkType::ADJP;
  return std::nullopt;
}

std::size_t find_head(const TreeNode& node, const HeadRuleTable& rules,
                      std::vector<std::string>* diagnostics) {
  if (auto head = try_head(node, rules)) return *head;
  if (diagnostics != nullptr) {
    diagnostics->push_back("no head rule matched '" + node.label().category +
                           "'; falling back to the rightmost terminal");
  }
  return node.yield_size() - 1;
}

ChunkedSentence extract_chunks(const TreeNode& tree, const HeadRuleTable& rules,
                               std::vector<std::string>* diagnostics) {
  Extractor extractor(tree, rules, diagnostics);
  return extractor.run(tree);
}

Corpus chunk_corpus(std::span<const TreeNode> trees, const HeadRuleTable& rules,
                    std::vector<std::string>* diagnostics) {
  Corpus corpus;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const auto stripped = strip_null_elements(trees[i]);
    if (!stripped) {
      if (diagnostics != nullptr) {
        diagnostics->push_back("tree " + std::to_string(i) +
                               " is empty after null-element removal; dropped");
      }
      continue;
    }
    ChunkedSentence chunked = extract_chunks(*stripped, rules, diagnostics);
    Sentence sentence;
    sentence.tags = encode_bio(chunked.spans, chunked.tokens.size());
    sentence.tokens = std::move(chunked.tokens);
    corpus.sentences.push_back(std::move(sentence));
  }
  return corpus;
}

std::string format_bracketed(const ChunkedSentence& sentence) {
  std::string out;
  std::size_t span_index = 0;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (!out.empty()) out += ' ';
    if (span_index < sentence.spans.size() &&
        sentence.spans[span_index].begin == i) {
      out += '[';
      out += to_string(sentence.spans[span_index].type);
      out += ' ';
    }
    out += sentence.tokens[i].word;
    if (span_index < sentence.spans.size() &&
        sentence.spans[span_index].end == i + 1) {
      out += ']';
      ++span_index;
    }
  }
  return out;
}

}  // namespace chunker
