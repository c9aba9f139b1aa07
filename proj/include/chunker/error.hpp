#ifndef CHUNKER_ERROR_HPP
#define CHUNKER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chunker {

/// Malformed input (corpus lines, tag syntax, tree text). The message
/// carries the position (line number or offset) when one is known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Gold/predicted corpora that cannot be compared (different tokenization).
class MismatchError : public std::runtime_error {
 public:
  explicit MismatchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chunker

#endif
