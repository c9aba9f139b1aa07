#include "chunker/baseline.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "chunker/error.hpp"

namespace chunker {

BaselineModel BaselineModel::train(const Corpus& train) {
  if (train.sentences.empty()) {
    throw std::invalid_argument("training corpus is empty");
  }
  // Tag counts per POS, keyed by tag text so the argmax tie-break is the
  // lexicographic order of the text form.
  std::map<std::string, std::map<std::string, std::size_t>> counts;
  for (std::size_t s = 0; s < train.sentences.size(); ++s) {
    const Sentence& sentence = train.sentences[s];
    if (!sentence.tagged()) {
      throw std::invalid_argument("training sentence " + std::to_string(s + 1) +
                                  " has no chunk tags");
    }
    for (std::size_t t = 0; t < sentence.tokens.size(); ++t) {
      ++counts[sentence.tokens[t].pos][(*sentence.tags)[t].to_string()];
    }
  }
  BaselineModel model;
  for (const auto& [pos, tag_counts] : counts) {
    const std::string* best_tag = nullptr;
    std::size_t best_count = 0;
    for (const auto& [tag, count] : tag_counts) {
      if (count > best_count) {  // first key wins ties: map order is the text order
        best_count = count;
        best_tag = &tag;
      }
    }
    model.entries_.emplace(pos, BioTag::parse(*best_tag));
  }
  return model;
}

BioTag BaselineModel::tag_for_pos(const std::string& pos) const {
  const auto it = entries_.find(pos);
  return it == entries_.end() ? BioTag::outside() : it->second;
}

std::vector<BioTag> BaselineModel::tag(const Sentence& sentence) const {
  std::vector<BioTag> tags;
  tags.reserve(sentence.tokens.size());
  for (const Token& token : sentence.tokens) {
    tags.push_back(tag_for_pos(token.pos));
  }
  return tags;
}

void BaselineModel::save(std::ostream& output) const {
  for (const auto& [pos, tag] : entries_) {
    output << pos << '\t' << tag.to_string() << '\n';
  }
}

BaselineModel BaselineModel::load(std::istream& input) {
  BaselineModel model;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw ParseError("baseline model line " + std::to_string(line_number) +
                       ": expected POS<TAB>tag");
    }
    model.entries_[line.substr(0, tab)] = BioTag::parse(line.substr(tab + 1));
  }
  return model;
}

}  // namespace chunker
