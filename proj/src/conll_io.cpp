#include "chunker/conll_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "chunker/error.hpp"

namespace chunker {

namespace {

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<std::string> split_columns(const std::string& line) {
  std::vector<std::string> columns;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) columns.push_back(line.substr(start, i - start));
    if (i < line.size() && line[i] == '\r') break;
  }
  return columns;
}

}  // namespace

std::size_t Corpus::token_count() const {
  std::size_t count = 0;
  for (const Sentence& sentence : sentences) count += sentence.tokens.size();
  return count;
}

Corpus read_corpus(std::istream& input) {
  Corpus corpus;
  Sentence current;
  int sentence_columns = 0;  // 0 until the first line of a sentence is seen
  std::size_t line_number = 0;

  auto flush_sentence = [&] {
    if (!current.tokens.empty()) {
      corpus.sentences.push_back(std::move(current));
      current = Sentence{};
    }
    sentence_columns = 0;
  };

  std::string line;
  while (std::getline(input, line)) {
    ++line_number;
    if (is_blank(line)) {
      flush_sentence();
      continue;
    }
    const std::vector<std::string> columns = split_columns(line);
    if (columns.size() != 2 && columns.size() != 3) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": expected 2 or 3 columns, got " +
                       std::to_string(columns.size()));
    }
    if (sentence_columns == 0) {
      sentence_columns = static_cast<int>(columns.size());
      if (sentence_columns == 3) current.tags.emplace();
    } else if (sentence_columns != static_cast<int>(columns.size())) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": column count changes within a sentence");
    }
    current.tokens.push_back(Token{columns[0], columns[1]});
    if (sentence_columns == 3) {
      try {
        current.tags->push_back(BioTag::parse(columns[2]));
      } catch (const ParseError& error) {
        throw ParseError("line " + std::to_string(line_number) + ": " +
                         error.what());
      }
    }
  }
  flush_sentence();
  return corpus;
}

Corpus read_corpus_file(const std::string& path) {
  std::ifstream input(path);
  if (!input) throw ParseError("cannot open '" + path + "'");
  return read_corpus(input);
}

void write_corpus(const Corpus& corpus, std::ostream& output) {
  bool any_tagged = false;
  bool any_untagged = false;
  for (const Sentence& sentence : corpus.sentences) {
    (sentence.tagged() ? any_tagged : any_untagged) = true;
  }
  if (any_tagged && any_untagged) {
    throw std::invalid_argument(
        "corpus mixes tagged and untagged sentences; cannot be written");
  }
  for (const Sentence& sentence : corpus.sentences) {
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      const Token& token = sentence.tokens[i];
      output << token.word << ' ' << token.pos;
      if (sentence.tagged()) output << ' ' << (*sentence.tags)[i].to_string();
      output << '\n';
    }
    output << '\n';
  }
}

std::string write_corpus(const Corpus& corpus) {
  std::ostringstream out;
  write_corpus(corpus, out);
  return out.str();
}

}  // namespace chunker
