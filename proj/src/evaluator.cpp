#include "chunker/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "chunker/error.hpp"

namespace chunker {

namespace {

double round2(double value) { return std::round(value * 100.0) / 100.0; }

std::string percent2(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", round2(value));
  return buffer;
}

void check_comparable(const Corpus& gold, const Corpus& pred) {
  if (gold.sentences.size() != pred.sentences.size()) {
    throw MismatchError("gold has " + std::to_string(gold.sentences.size()) +
                        " sentences but predictions have " +
                        std::to_string(pred.sentences.size()));
  }
  for (std::size_t s = 0; s < gold.sentences.size(); ++s) {
    const Sentence& g = gold.sentences[s];
    const Sentence& p = pred.sentences[s];
    if (!g.tagged() || !p.tagged()) {
      throw std::invalid_argument("sentence " + std::to_string(s + 1) +
                                  " is untagged; cannot evaluate");
    }
    if (g.tokens.size() != p.tokens.size()) {
      throw MismatchError("sentence " + std::to_string(s + 1) + ": gold has " +
                          std::to_string(g.tokens.size()) +
                          " tokens, predictions have " +
                          std::to_string(p.tokens.size()));
    }
    for (std::size_t t = 0; t < g.tokens.size(); ++t) {
      if (g.tokens[t] != p.tokens[t]) {
        throw MismatchError(
            "sentence " + std::to_string(s + 1) + ", token " +
            std::to_string(t + 1) + ": gold '" + g.tokens[t].word + "/" +
            g.tokens[t].pos + "' vs predicted '" + p.tokens[t].word + "/" +
            p.tokens[t].pos + "'");
      }
    }
  }
}

}  // namespace

double Score::precision() const {
  if (pred_count == 0) return 0.0;
  return 100.0 * static_cast<double>(correct_count) /
         static_cast<double>(pred_count);
}

double Score::recall() const {
  if (gold_count == 0) return 0.0;
  return 100.0 * static_cast<double>(correct_count) /
         static_cast<double>(gold_count);
}

double Score::f(double beta) const {
  const double p = precision();
  const double r = recall();
  const double b2 = beta * beta;
  if (b2 * p + r == 0.0) return 0.0;
  return (b2 + 1.0) * p * r / (b2 * p + r);
}

EvalReport evaluate(const Corpus& gold, const Corpus& pred,
                    const EvalConfig& config) {
  if (!(config.beta > 0.0)) {
    throw std::invalid_argument("beta must be positive");
  }
  check_comparable(gold, pred);

  EvalReport report;
  report.beta = config.beta;

  std::size_t tokens_total = 0;
  std::size_t tokens_correct = 0;
  for (std::size_t s = 0; s < gold.sentences.size(); ++s) {
    const std::vector<BioTag>& gold_tags = *gold.sentences[s].tags;
    const std::vector<BioTag>& pred_tags = *pred.sentences[s].tags;

    tokens_total += gold_tags.size();
    for (std::size_t t = 0; t < gold_tags.size(); ++t) {
      if (gold_tags[t] == pred_tags[t]) ++tokens_correct;
    }

    const std::vector<ChunkSpan> gold_spans = decode_bio(gold_tags);
    const std::vector<ChunkSpan> pred_spans = decode_bio(pred_tags);
    for (const ChunkSpan& span : gold_spans) {
      ++report.per_type[std::string(to_string(span.type))].gold_count;
    }
    for (const ChunkSpan& span : pred_spans) {
      ++report.per_type[std::string(to_string(span.type))].pred_count;
    }
    // Spans are sorted and disjoint on both sides; one pass finds the
    // exact (type, begin, end) matches.
    std::size_t j = 0;
    for (const ChunkSpan& g : gold_spans) {
      while (j < pred_spans.size() && pred_spans[j].begin < g.begin) ++j;
      if (j < pred_spans.size() && pred_spans[j] == g) {
        ++report.per_type[std::string(to_string(g.type))].correct_count;
        ++j;
      }
    }
  }

  for (const auto& [name, score] : report.per_type) {
    report.overall.gold_count += score.gold_count;
    report.overall.pred_count += score.pred_count;
    report.overall.correct_count += score.correct_count;
  }
  if (tokens_total > 0) {
    report.token_accuracy = 100.0 * static_cast<double>(tokens_correct) /
                            static_cast<double>(tokens_total);
  }
  return report;
}

std::string format_report(const EvalReport& report) {
  std::string out = "precision: " + percent2(report.overall.precision()) +
                    "%; recall: " + percent2(report.overall.recall()) +
                    "%; FB1: " + percent2(report.overall.f(report.beta)) +
                    "\n";
  for (const auto& [name, score] : report.per_type) {
    if (score.gold_count == 0 && score.pred_count == 0) continue;
    out += name + ": precision: " + percent2(score.precision()) +
           "%; recall: " + percent2(score.recall()) +
           "%; FB1: " + percent2(score.f(report.beta)) + "\n";
  }
  return out;
}

std::string format_report_kv(const EvalReport& report) {
  auto emit = [](std::string& out, const std::string& prefix,
                 const Score& score, double beta) {
    out += prefix + ".gold " + std::to_string(score.gold_count) + "\n";
    out += prefix + ".predicted " + std::to_string(score.pred_count) + "\n";
    out += prefix + ".correct " + std::to_string(score.correct_count) + "\n";
    out += prefix + ".precision " + percent2(score.precision()) + "\n";
    out += prefix + ".recall " + percent2(score.recall()) + "\n";
    out += prefix + ".f " + percent2(score.f(beta)) + "\n";
  };
  std::string out;
  emit(out, "overall", report.overall, report.beta);
  if (report.token_accuracy) {
    out += "overall.token_accuracy " + percent2(*report.token_accuracy) + "\n";
  }
  for (const auto& [name, score] : report.per_type) {
    if (score.gold_count == 0 && score.pred_count == 0) continue;
    emit(out, name, score, report.beta);
  }
  return out;
}

Census take_census(const Corpus& corpus) {
  Census census;
  for (const Sentence& sentence : corpus.sentences) {
    census.tokens += sentence.tokens.size();
    if (!sentence.tagged()) continue;
    for (const ChunkSpan& span : decode_bio(*sentence.tags)) {
      ++census.chunks;
      ++census.per_type[std::string(to_string(span.type))];
    }
  }
  return census;
}

std::string format_census(const Census& census) {
  std::string out = "tokens " + std::to_string(census.tokens) + "\n" +
                    "chunks " + std::to_string(census.chunks) + "\n";
  std::vector<std::pair<std::string, std::size_t>> rows(
      census.per_type.begin(), census.per_type.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  for (const auto& [name, count] : rows) {
    const long long percent =
        census.chunks == 0
            ? 0
            : std::llround(100.0 * static_cast<double>(count) /
                           static_cast<double>(census.chunks));
    out += name + " " + std::to_string(count) + " " + std::to_string(percent) +
           "%\n";
  }
  return out;
}

}  // namespace chunker
