#ifndef CHUNKER_EVALUATOR_HPP
#define CHUNKER_EVALUATOR_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "chunker/chunks.hpp"
#include "chunker/conll_io.hpp"

namespace chunker {

struct EvalConfig {
  double beta = 1.0;
};

/// Counts and rates for one chunk type (or the whole corpus). Rates are
/// percentages in [0, 100]; a side with zero chunks scores 0.
struct Score {
  std::size_t gold_count = 0;
  std::size_t pred_count = 0;
  std::size_t correct_count = 0;

  double precision() const;
  double recall() const;
  double f(double beta) const;
};

struct EvalReport {
  std::map<std::string, Score> per_type;  // keyed by type name, so sorted
  Score overall;
  double beta = 1.0;
  std::optional<double> token_accuracy;  // informational only

  double fb() const { return overall.f(beta); }
};

/// Scores predicted chunking against gold. Both corpora must be tagged and
/// token-identical (words and POS); throws MismatchError naming the first
/// divergent sentence/token otherwise, std::invalid_argument when beta <= 0
/// or a sentence is untagged. Tags are decoded with decode_bio on both
/// sides, so the repair rule is applied; a predicted chunk is correct iff a
/// gold chunk has the same type and boundaries.
EvalReport evaluate(const Corpus& gold, const Corpus& pred,
                    const EvalConfig& config = {});

/// One overall line `precision: PP.PP%; recall: RR.RR%; FB1: FF.FF`, then a
/// line per chunk type present on either side, sorted alphabetically.
/// Percentages are rounded half-up to two decimals.
std::string format_report(const EvalReport& report);

/// The same report as a flat key-value block (machine-readable).
std::string format_report_kv(const EvalReport& report);

/// Corpus census: token and chunk totals plus per-type chunk counts (chunks
/// per decode_bio semantics).
struct Census {
  std::size_t tokens = 0;
  std::size_t chunks = 0;
  std::map<std::string, std::size_t> per_type;
};

Census take_census(const Corpus& corpus);

/// Census rendering: totals first, then per-type counts with whole-percent
/// shares, largest first.
std::string format_census(const Census& census);

}  // namespace chunker

#endif
