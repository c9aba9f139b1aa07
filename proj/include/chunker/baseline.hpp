#ifndef CHUNKER_BASELINE_HPP
#define CHUNKER_BASELINE_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "chunker/chunks.hpp"
#include "chunker/conll_io.hpp"

namespace chunker {

/// Assigns every POS tag its most frequent chunk tag from training data;
/// unseen POS tags get O. Ties break toward the lexicographically smaller
/// tag text, so training is deterministic.
class BaselineModel {
 public:
  /// Throws std::invalid_argument on an empty or (partly) untagged corpus.
  static BaselineModel train(const Corpus& train);

  BioTag tag_for_pos(const std::string& pos) const;
  std::vector<BioTag> tag(const Sentence& sentence) const;

  /// Plain text, one `POS<TAB>tag` line per entry, sorted by POS.
  void save(std::ostream& output) const;
  static BaselineModel load(std::istream& input);

  const std::map<std::string, BioTag>& entries() const { return entries_; }

  friend bool operator==(const BaselineModel&, const BaselineModel&) = default;

 private:
  std::map<std::string, BioTag> entries_;
};

}  // namespace chunker

#endif
