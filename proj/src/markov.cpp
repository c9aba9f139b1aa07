#include "chunker/markov.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "chunker/error.hpp"

namespace chunker {

namespace {

constexpr double kMinusInfinity = -std::numeric_limits<double>::infinity();

// I-X may only follow B-X or I-X; everything else may follow anything.
bool transition_allowed(const BioTag& prev, const BioTag& next) {
  if (next.kind() != BioKind::I) return true;
  return !prev.is_outside() && prev.type() == next.type();
}

bool start_allowed(const BioTag& tag) { return tag.kind() != BioKind::I; }

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

std::string MarkovModel::observation_key(const Token& token) const {
  if (frequent_words_.count(token.word) > 0) {
    return "W\t" + token.word + "\t" + token.pos;
  }
  return "P\t" + token.pos;
}

double MarkovModel::emission_logp(std::size_t state, const Token& token) const {
  const auto& table = emission_logp_[state];
  const auto it = table.find(observation_key(token));
  // An observation unseen with this state scores exactly like the unknown
  // symbol under add-k smoothing.
  return it == table.end() ? unknown_logp_[state] : it->second;
}

MarkovModel MarkovModel::train(const Corpus& train, double smoothing,
                               std::size_t cutoff) {
  if (train.sentences.empty()) {
    throw std::invalid_argument("training corpus is empty");
  }
  if (!(smoothing > 0.0)) {
    throw std::invalid_argument("smoothing constant must be positive");
  }

  MarkovModel model;
  model.smoothing_ = smoothing;
  model.cutoff_ = cutoff;

  std::map<std::string, std::size_t> word_freq;
  std::map<std::string, std::size_t> tag_index_by_text;
  for (std::size_t s = 0; s < train.sentences.size(); ++s) {
    const Sentence& sentence = train.sentences[s];
    if (!sentence.tagged()) {
      throw std::invalid_argument("training sentence " + std::to_string(s + 1) +
                                  " has no chunk tags");
    }
    for (const Token& token : sentence.tokens) ++word_freq[token.word];
    for (const BioTag& tag : *sentence.tags) {
      tag_index_by_text.emplace(tag.to_string(), 0);
    }
  }
  for (const auto& [word, freq] : word_freq) {
    if (freq >= cutoff) model.frequent_words_.insert(word);
  }
  // std::map iteration gives the states sorted by tag text.
  for (auto& [text, index] : tag_index_by_text) {
    index = model.states_.size();
    model.states_.push_back(BioTag::parse(text));
  }
  const std::size_t m = model.states_.size();

  std::vector<std::size_t> start_count(m, 0);
  std::vector<std::vector<std::size_t>> transition_count(
      m, std::vector<std::size_t>(m, 0));
  std::vector<std::size_t> outgoing_count(m, 0);
  std::vector<std::map<std::string, std::size_t>> emission_count(m);
  std::vector<std::size_t> state_total(m, 0);
  std::map<std::string, std::size_t> vocabulary;  // observation key -> arbitrary

  for (const Sentence& sentence : train.sentences) {
    std::size_t previous = 0;
    for (std::size_t t = 0; t < sentence.tokens.size(); ++t) {
      const std::size_t state =
          tag_index_by_text.at((*sentence.tags)[t].to_string());
      if (t == 0) {
        ++start_count[state];
      } else {
        ++transition_count[previous][state];
        ++outgoing_count[previous];
      }
      const std::string key = model.observation_key(sentence.tokens[t]);
      ++emission_count[state][key];
      ++state_total[state];
      vocabulary.emplace(key, 0);
      previous = state;
    }
  }

  const double k = smoothing;

  std::size_t start_allowed_count = 0;
  for (const BioTag& tag : model.states_) {
    if (start_allowed(tag)) ++start_allowed_count;
  }
  model.start_logp_.assign(m, kMinusInfinity);
  const double start_denominator =
      static_cast<double>(train.sentences.size()) +
      k * static_cast<double>(start_allowed_count);
  for (std::size_t s = 0; s < m; ++s) {
    if (!start_allowed(model.states_[s])) continue;
    model.start_logp_[s] =
        std::log((static_cast<double>(start_count[s]) + k) / start_denominator);
  }

  model.transition_logp_.assign(m, std::vector<double>(m, kMinusInfinity));
  for (std::size_t prev = 0; prev < m; ++prev) {
    std::size_t allowed = 0;
    for (std::size_t next = 0; next < m; ++next) {
      if (transition_allowed(model.states_[prev], model.states_[next])) {
        ++allowed;
      }
    }
    const double denominator = static_cast<double>(outgoing_count[prev]) +
                               k * static_cast<double>(allowed);
    for (std::size_t next = 0; next < m; ++next) {
      if (!transition_allowed(model.states_[prev], model.states_[next])) {
        continue;
      }
      model.transition_logp_[prev][next] = std::log(
          (static_cast<double>(transition_count[prev][next]) + k) /
          denominator);
    }
  }

  model.emission_logp_.resize(m);
  model.unknown_logp_.resize(m);
  const double vocabulary_size = static_cast<double>(vocabulary.size());
  for (std::size_t s = 0; s < m; ++s) {
    const double denominator =
        static_cast<double>(state_total[s]) + k * (vocabulary_size + 1.0);
    for (const auto& [key, count] : emission_count[s]) {
      model.emission_logp_[s].emplace(
          key, std::log((static_cast<double>(count) + k) / denominator));
    }
    model.unknown_logp_[s] = std::log(k / denominator);
  }
  return model;
}

std::vector<BioTag> MarkovModel::tag(const Sentence& sentence) const {
  const std::size_t n = sentence.tokens.size();
  std::vector<BioTag> result(n, BioTag::outside());
  if (n == 0 || states_.empty()) return result;
  const std::size_t m = states_.size();

  std::size_t segment_start = 0;
  while (segment_start < n) {
    std::vector<std::vector<int>> backpointer;
    std::vector<double> current(m);
    bool any_finite = false;
    for (std::size_t s = 0; s < m; ++s) {
      current[s] =
          start_logp_[s] + emission_logp(s, sentence.tokens[segment_start]);
      if (current[s] > kMinusInfinity) any_finite = true;
    }
    if (!any_finite) {
      // No state can open a sequence here (pathological model); tag the
      // token O and restart after it.
      ++segment_start;
      continue;
    }

    std::size_t last = segment_start;
    for (std::size_t t = segment_start + 1; t < n; ++t) {
      std::vector<double> next(m, kMinusInfinity);
      std::vector<int> from(m, -1);
      bool next_finite = false;
      for (std::size_t s = 0; s < m; ++s) {
        double best = kMinusInfinity;
        int best_prev = -1;
        for (std::size_t p = 0; p < m; ++p) {
          if (current[p] == kMinusInfinity) continue;
          const double logp = transition_logp_[p][s];
          if (logp == kMinusInfinity) continue;
          const double score = current[p] + logp;
          // Strict comparison keeps the first (lexicographically smallest)
          // predecessor on ties.
          if (score > best) {
            best = score;
            best_prev = static_cast<int>(p);
          }
        }
        if (best_prev >= 0) {
          next[s] = best + emission_logp(s, sentence.tokens[t]);
          from[s] = best_prev;
          next_finite = true;
        }
      }
      if (!next_finite) break;
      backpointer.push_back(std::move(from));
      current = std::move(next);
      last = t;
    }

    std::size_t best_state = 0;
    double best_score = kMinusInfinity;
    for (std::size_t s = 0; s < m; ++s) {
      if (current[s] > best_score) {
        best_score = current[s];
        best_state = s;
      }
    }
    for (std::size_t t = last; t > segment_start; --t) {
      result[t] = states_[best_state];
      best_state = static_cast<std::size_t>(
          backpointer[t - segment_start - 1][best_state]);
    }
    result[segment_start] = states_[best_state];
    segment_start = last + 1;
  }
  return result;
}

void MarkovModel::save(std::ostream& output) const {
  output << "chunktool-markov 1\n";
  output << "smoothing " << format_double(smoothing_) << "\n";
  output << "cutoff " << cutoff_ << "\n";

  output << "states " << states_.size() << "\n";
  for (const BioTag& tag : states_) output << tag.to_string() << "\n";

  std::vector<std::string> words(frequent_words_.begin(),
                                 frequent_words_.end());
  std::sort(words.begin(), words.end());
  output << "words " << words.size() << "\n";
  for (const std::string& word : words) output << word << "\n";

  output << "start " << states_.size() << "\n";
  for (std::size_t s = 0; s < states_.size(); ++s) {
    output << states_[s].to_string() << " " << format_double(start_logp_[s])
           << "\n";
  }

  std::size_t transitions = 0;
  for (const auto& row : transition_logp_) {
    for (double logp : row) {
      if (logp != kMinusInfinity) ++transitions;
    }
  }
  output << "transitions " << transitions << "\n";
  for (std::size_t p = 0; p < states_.size(); ++p) {
    for (std::size_t s = 0; s < states_.size(); ++s) {
      if (transition_logp_[p][s] == kMinusInfinity) continue;
      output << states_[p].to_string() << " " << states_[s].to_string() << " "
             << format_double(transition_logp_[p][s]) << "\n";
    }
  }

  std::size_t emissions = 0;
  for (const auto& table : emission_logp_) emissions += table.size();
  output << "emissions " << emissions << "\n";
  for (std::size_t s = 0; s < states_.size(); ++s) {
    std::vector<std::pair<std::string, double>> rows(
        emission_logp_[s].begin(), emission_logp_[s].end());
    std::sort(rows.begin(), rows.end());
    for (const auto& [key, logp] : rows) {
      // Keys are "W\tword\tpos" or "P\tpos"; tabs become single spaces.
      std::string printable = key;
      std::replace(printable.begin(), printable.end(), '\t', ' ');
      output << states_[s].to_string() << " " << printable << " "
             << format_double(logp) << "\n";
    }
  }

  output << "unknown " << states_.size() << "\n";
  for (std::size_t s = 0; s < states_.size(); ++s) {
    output << states_[s].to_string() << " " << format_double(unknown_logp_[s])
           << "\n";
  }
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream stream(line);
  std::string field;
  while (stream >> field) fields.push_back(field);
  return fields;
}

[[noreturn]] void malformed(std::size_t line_number, const std::string& what) {
  throw ParseError("markov model line " + std::to_string(line_number) + ": " +
                   what);
}

}  // namespace

MarkovModel MarkovModel::load(std::istream& input) {
  MarkovModel model;
  std::size_t line_number = 0;
  std::string line;

  auto next_line = [&]() -> std::string& {
    if (!std::getline(input, line)) {
      malformed(line_number, "unexpected end of file");
    }
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  };
  auto expect_section = [&](const std::string& name) -> std::size_t {
    const auto fields = split_fields(next_line());
    if (fields.size() != 2 || fields[0] != name) {
      malformed(line_number, "expected '" + name + " <count>'");
    }
    return std::stoul(fields[1]);
  };

  if (next_line() != "chunktool-markov 1") {
    malformed(line_number, "not a markov model file (missing header)");
  }
  {
    const auto fields = split_fields(next_line());
    if (fields.size() != 2 || fields[0] != "smoothing") {
      malformed(line_number, "expected 'smoothing <value>'");
    }
    model.smoothing_ = std::stod(fields[1]);
  }
  {
    const auto fields = split_fields(next_line());
    if (fields.size() != 2 || fields[0] != "cutoff") {
      malformed(line_number, "expected 'cutoff <value>'");
    }
    model.cutoff_ = std::stoul(fields[1]);
  }

  const std::size_t state_count = expect_section("states");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < state_count; ++i) {
    const std::string& text = next_line();
    index.emplace(text, model.states_.size());
    model.states_.push_back(BioTag::parse(text));
  }
  auto state_of = [&](const std::string& text) -> std::size_t {
    const auto it = index.find(text);
    if (it == index.end()) malformed(line_number, "unknown state " + text);
    return it->second;
  };

  const std::size_t word_count = expect_section("words");
  for (std::size_t i = 0; i < word_count; ++i) {
    model.frequent_words_.insert(next_line());
  }

  model.start_logp_.assign(state_count, kMinusInfinity);
  const std::size_t start_lines = expect_section("start");
  for (std::size_t i = 0; i < start_lines; ++i) {
    const auto fields = split_fields(next_line());
    if (fields.size() != 2) malformed(line_number, "expected '<tag> <logp>'");
    model.start_logp_[state_of(fields[0])] = std::stod(fields[1]);
  }

  model.transition_logp_.assign(
      state_count, std::vector<double>(state_count, kMinusInfinity));
  const std::size_t transition_lines = expect_section("transitions");
  for (std::size_t i = 0; i < transition_lines; ++i) {
    const auto fields = split_fields(next_line());
    if (fields.size() != 3) {
      malformed(line_number, "expected '<prev> <tag> <logp>'");
    }
    model.transition_logp_[state_of(fields[0])][state_of(fields[1])] =
        std::stod(fields[2]);
  }

  model.emission_logp_.resize(state_count);
  const std::size_t emission_lines = expect_section("emissions");
  for (std::size_t i = 0; i < emission_lines; ++i) {
    const auto fields = split_fields(next_line());
    if (fields.size() == 5 && fields[1] == "W") {
      model.emission_logp_[state_of(fields[0])].emplace(
          "W\t" + fields[2] + "\t" + fields[3], std::stod(fields[4]));
    } else if (fields.size() == 4 && fields[1] == "P") {
      model.emission_logp_[state_of(fields[0])].emplace("P\t" + fields[2],
                                                        std::stod(fields[3]));
    } else {
      malformed(line_number, "expected a W or P emission entry");
    }
  }

  model.unknown_logp_.assign(state_count, kMinusInfinity);
  const std::size_t unknown_lines = expect_section("unknown");
  for (std::size_t i = 0; i < unknown_lines; ++i) {
    const auto fields = split_fields(next_line());
    if (fields.size() != 2) malformed(line_number, "expected '<tag> <logp>'");
    model.unknown_logp_[state_of(fields[0])] = std::stod(fields[1]);
  }
  return model;
}

}  // namespace chunker
