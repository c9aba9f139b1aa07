#ifndef CHUNKER_CONLL_IO_HPP
#define CHUNKER_CONLL_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chunker/chunks.hpp"

namespace chunker {

/// A surface form plus its part-of-speech tag. Both non-empty; the word
/// carries no internal whitespace.
struct Token {
  std::string word;
  std::string pos;

  friend bool operator==(const Token&, const Token&) = default;
};

/// One sentence: its tokens, plus chunk tags when the source had a third
/// column. When present, tags has exactly one entry per token.
struct Sentence {
  std::vector<Token> tokens;
  std::optional<std::vector<BioTag>> tags;

  bool tagged() const { return tags.has_value(); }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Corpus {
  std::vector<Sentence> sentences;

  std::size_t token_count() const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Reads the three-column format `word POS [chunktag]`. Whitespace-separated
/// columns, blank line ends a sentence, a missing final blank line still ends
/// the last sentence. Column counts must agree within a sentence. Throws
/// ParseError naming the line number (or the offending tag).
Corpus read_corpus(std::istream& input);
Corpus read_corpus_file(const std::string& path);

/// Writes the exact format read_corpus accepts: single-space separated
/// columns, one blank line after every sentence. All sentences must be
/// tagged, or none; throws std::invalid_argument on a mix.
void write_corpus(const Corpus& corpus, std::ostream& output);
std::string write_corpus(const Corpus& corpus);

}  // namespace chunker

#endif
