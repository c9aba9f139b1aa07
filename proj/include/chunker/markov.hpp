#ifndef CHUNKER_MARKOV_HPP
#define CHUNKER_MARKOV_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "chunker/chunks.hpp"
#include "chunker/conll_io.hpp"

namespace chunker {

/// First-order Markov chunk tagger. States are the chunk tags seen in
/// training; transitions are add-k smoothed over the structurally allowed
/// successors (I-X is reachable only from B-X/I-X, so decoded output is
/// always consistent); emissions are (word, POS) pairs, with words seen
/// fewer than `cutoff` times in training pooled into a POS-only back-off,
/// plus an unknown symbol. Decoding is log-space Viterbi.
class MarkovModel {
 public:
  /// Throws std::invalid_argument on an empty/untagged corpus or
  /// non-positive smoothing.
  static MarkovModel train(const Corpus& train, double smoothing = 0.1,
                           std::size_t cutoff = 2);

  /// The most probable consistent tag sequence for the sentence. Total:
  /// unknown words fall back to their POS, unknown POS to the unknown
  /// symbol. Score ties break toward the lexicographically smaller tag.
  std::vector<BioTag> tag(const Sentence& sentence) const;

  /// Plain-text model table, sorted, with a version header.
  void save(std::ostream& output) const;
  static MarkovModel load(std::istream& input);

  // Scoring surface (also used by the exhaustive-search test oracle).
  const std::vector<BioTag>& states() const { return states_; }
  double start_logp(std::size_t state) const { return start_logp_[state]; }
  double transition_logp(std::size_t prev, std::size_t next) const {
    return transition_logp_[prev][next];
  }
  double emission_logp(std::size_t state, const Token& token) const;

  double smoothing() const { return smoothing_; }
  std::size_t cutoff() const { return cutoff_; }

 private:
  std::string observation_key(const Token& token) const;

  std::vector<BioTag> states_;  // sorted by tag text
  std::unordered_set<std::string> frequent_words_;
  std::vector<double> start_logp_;
  std::vector<std::vector<double>> transition_logp_;
  std::vector<std::unordered_map<std::string, double>> emission_logp_;
  std::vector<double> unknown_logp_;
  double smoothing_ = 0.1;
  std::size_t cutoff_ = 2;
};

}  // namespace chunker

#endif
