#include "chunker/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chunker/baseline.hpp"
#include "chunker/chunks.hpp"
#include "chunker/conll_io.hpp"
#include "chunker/error.hpp"
#include "chunker/evaluator.hpp"
#include "chunker/markov.hpp"
#include "chunker/ptb.hpp"
#include "chunker/tree2chunk.hpp"

namespace chunker::cli {

namespace {

Corpus read_corpus_arg(const std::string& path, std::istream& in) {
  if (path == "-") return read_corpus(in);
  return read_corpus_file(path);
}

std::vector<TreeNode> read_trees_arg(const std::string& path,
                                     std::istream& in) {
  if (path == "-") return parse_trees(in);
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  return parse_trees(file);
}

std::ifstream open_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  return file;
}

// Runs `emit` against --out (or the process output stream when unset).
void with_output(const std::string& path, std::ostream& out,
                 const std::function<void(std::ostream&)>& emit) {
  if (path.empty() || path == "-") {
    emit(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "' for writing");
  emit(file);
  file.flush();
  if (!file) throw ParseError("write to '" + path + "' failed");
}

void print_diagnostics(const std::vector<std::string>& diagnostics,
                       std::ostream& err) {
  for (const std::string& message : diagnostics) {
    err << "warning: " << message << "\n";
  }
}

std::vector<BioTag> require_tags(const Sentence& sentence, std::size_t index) {
  if (!sentence.tagged()) {
    throw ParseError("sentence " + std::to_string(index + 1) +
                     " has no chunk tag column");
  }
  return *sentence.tags;
}

void run_convert(const std::string& input, const std::string& output,
                 std::istream& in, std::ostream& out, std::ostream& err) {
  const std::vector<TreeNode> trees = read_trees_arg(input, in);
  std::vector<std::string> diagnostics;
  const Corpus corpus =
      chunk_corpus(trees, HeadRuleTable::standard(), &diagnostics);
  print_diagnostics(diagnostics, err);
  with_output(output, out, [&](std::ostream& o) { write_corpus(corpus, o); });
}

void run_repair(const std::string& input, const std::string& output,
                std::istream& in, std::ostream& out) {
  Corpus corpus = read_corpus_arg(input, in);
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    corpus.sentences[i].tags =
        repair_tags(require_tags(corpus.sentences[i], i));
  }
  with_output(output, out, [&](std::ostream& o) { write_corpus(corpus, o); });
}

void run_decode(const std::string& input, const std::string& output,
                std::istream& in, std::ostream& out) {
  const Corpus corpus = read_corpus_arg(input, in);
  with_output(output, out, [&](std::ostream& o) {
    for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
      for (const ChunkSpan& span :
           decode_bio(require_tags(corpus.sentences[i], i))) {
        o << i << '\t' << to_string(span.type) << '\t' << span.begin << '\t'
          << span.end << '\n';
      }
    }
  });
}

void run_encode(const std::string& spans_path, const std::string& tokens_path,
                const std::string& output, std::istream& in,
                std::ostream& out) {
  Corpus corpus = tokens_path == "-" ? read_corpus(in)
                                     : read_corpus_file(tokens_path);
  std::vector<std::vector<ChunkSpan>> spans(corpus.sentences.size());

  std::ifstream spans_file;
  std::istream* spans_in = &in;
  if (spans_path != "-") {
    spans_file = open_file(spans_path);
    spans_in = &spans_file;
  }
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(*spans_in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::size_t sentence = 0, begin = 0, end = 0;
    std::string type_name;
    if (!(fields >> sentence >> type_name >> begin >> end)) {
      throw ParseError("spans line " + std::to_string(line_number) +
                       ": expected 'sentence type begin end'");
    }
    const auto type = chunk_type_from(type_name);
    if (!type) {
      throw ParseError("spans line " + std::to_string(line_number) +
                       ": unknown chunk type '" + type_name + "'");
    }
    if (sentence >= corpus.sentences.size()) {
      throw ParseError("spans line " + std::to_string(line_number) +
                       ": sentence index " + std::to_string(sentence) +
                       " out of range");
    }
    spans[sentence].push_back(ChunkSpan{*type, begin, end});
  }
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    std::sort(spans[i].begin(), spans[i].end(),
              [](const ChunkSpan& a, const ChunkSpan& b) {
                return a.begin < b.begin;
              });
    try {
      corpus.sentences[i].tags =
          encode_bio(spans[i], corpus.sentences[i].tokens.size());
    } catch (const std::invalid_argument& error) {
      throw ParseError("sentence " + std::to_string(i) + ": " + error.what());
    }
  }
  with_output(output, out, [&](std::ostream& o) { write_corpus(corpus, o); });
}

void run_eval(const std::string& gold_path, const std::string& pred_path,
              double beta, bool kv, std::istream& in, std::ostream& out) {
  const Corpus gold = read_corpus_arg(gold_path, in);
  const Corpus pred = read_corpus_arg(pred_path, in);
  const EvalReport report = evaluate(gold, pred, EvalConfig{beta});
  out << (kv ? format_report_kv(report) : format_report(report));
}

void run_stats(const std::string& input, std::istream& in, std::ostream& out) {
  const Corpus corpus = read_corpus_arg(input, in);
  const bool any_tagged =
      std::any_of(corpus.sentences.begin(), corpus.sentences.end(),
                  [](const Sentence& s) { return s.tagged(); });
  if (!corpus.sentences.empty() && !any_tagged) {
    throw ParseError("input has no chunk tag column; nothing to count");
  }
  out << format_census(take_census(corpus));
}

void run_baseline_train(const std::string& input, const std::string& model,
                        std::istream& in) {
  const Corpus corpus = read_corpus_arg(input, in);
  const BaselineModel trained = BaselineModel::train(corpus);
  std::ofstream file(model);
  if (!file) throw ParseError("cannot open '" + model + "' for writing");
  trained.save(file);
}

void run_markov_train(const std::string& input, const std::string& model,
                      double smoothing, std::size_t cutoff, std::istream& in) {
  const Corpus corpus = read_corpus_arg(input, in);
  const MarkovModel trained = MarkovModel::train(corpus, smoothing, cutoff);
  std::ofstream file(model);
  if (!file) throw ParseError("cannot open '" + model + "' for writing");
  trained.save(file);
}

void run_tag(const std::string& input, const std::string& model_path,
             const std::string& output, std::istream& in, std::ostream& out) {
  Corpus corpus = read_corpus_arg(input, in);

  std::string header;
  {
    std::ifstream model_file = open_file(model_path);
    std::getline(model_file, header);
  }
  std::ifstream model_file = open_file(model_path);
  if (header.rfind("chunktool-markov", 0) == 0) {
    const MarkovModel model = MarkovModel::load(model_file);
    for (Sentence& sentence : corpus.sentences) {
      sentence.tags = model.tag(sentence);
    }
  } else {
    const BaselineModel model = BaselineModel::load(model_file);
    for (Sentence& sentence : corpus.sentences) {
      sentence.tags = model.tag(sentence);
    }
  }
  with_output(output, out, [&](std::ostream& o) { write_corpus(corpus, o); });
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Text chunking toolkit: treebank-to-chunk conversion, BIO "
               "tags, chunkers and evaluation"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output;
  std::string model;
  std::string gold_path;
  std::string pred_path;
  std::string tokens_path;
  double beta = 1.0;
  double smoothing = 0.1;
  std::size_t cutoff = 2;
  bool kv = false;

  CLI::App* convert =
      app.add_subcommand("convert", "Treebank trees to chunk-tagged columns");
  convert->add_option("input", input, "tree file ('-' for stdin)");
  convert->add_option("--out", output, "output file (default stdout)");

  CLI::App* encode =
      app.add_subcommand("encode", "Span list plus tokens to tagged columns");
  encode->add_option("spans", input, "span file ('-' for stdin)");
  encode->add_option("--tokens", tokens_path, "corpus supplying word/POS")
      ->required();
  encode->add_option("--out", output, "output file (default stdout)");

  CLI::App* decode =
      app.add_subcommand("decode", "Tagged columns to a span list");
  decode->add_option("input", input, "corpus file ('-' for stdin)");
  decode->add_option("--out", output, "output file (default stdout)");

  CLI::App* repair = app.add_subcommand(
      "repair", "Rewrite tags so every I-X continues a chunk of type X");
  repair->add_option("input", input, "corpus file ('-' for stdin)");
  repair->add_option("--out", output, "output file (default stdout)");

  CLI::App* eval =
      app.add_subcommand("eval", "Score predictions against gold chunks");
  eval->add_option("--gold", gold_path, "gold corpus")->required();
  eval->add_option("--pred", pred_path, "predicted corpus")->required();
  eval->add_option("--beta", beta, "F-measure beta (default 1)");
  eval->add_flag("--kv", kv, "machine-readable key-value output");

  CLI::App* baseline_train = app.add_subcommand(
      "baseline-train", "Train the most-frequent-tag-per-POS baseline");
  baseline_train->add_option("input", input, "training corpus");
  baseline_train->add_option("--model", model, "model output path")
      ->required();

  CLI::App* markov_train =
      app.add_subcommand("markov-train", "Train the Markov chunk tagger");
  markov_train->add_option("input", input, "training corpus");
  markov_train->add_option("--model", model, "model output path")->required();
  markov_train->add_option("--smoothing", smoothing,
                           "add-k smoothing constant (default 0.1)");
  markov_train->add_option("--cutoff", cutoff,
                           "pool words seen fewer times than this (default 2)");

  CLI::App* tag =
      app.add_subcommand("tag", "Tag a corpus with a trained model");
  tag->add_option("input", input, "corpus file ('-' for stdin)");
  tag->add_option("--model", model, "model file")->required();
  tag->add_option("--out", output, "output file (default stdout)");

  CLI::App* stats =
      app.add_subcommand("stats", "Census: tokens, chunks, chunks per type");
  stats->add_option("input", input, "corpus file ('-' for stdin)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& help) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& error) {
    err << error.what() << "\n";
    return kExitUsage;
  }

  try {
    if (convert->parsed()) {
      run_convert(input, output, in, out, err);
    } else if (encode->parsed()) {
      run_encode(input, tokens_path, output, in, out);
    } else if (decode->parsed()) {
      run_decode(input, output, in, out);
    } else if (repair->parsed()) {
      run_repair(input, output, in, out);
    } else if (eval->parsed()) {
      run_eval(gold_path, pred_path, beta, kv, in, out);
    } else if (baseline_train->parsed()) {
      run_baseline_train(input, model, in);
    } else if (markov_train->parsed()) {
      run_markov_train(input, model, smoothing, cutoff, in);
    } else if (tag->parsed()) {
      run_tag(input, model, output, in, out);
    } else if (stats->parsed()) {
      run_stats(input, in, out);
    }
  } catch (const MismatchError& error) {
    err << "error: " << error.what() << "\n";
    return kExitMismatch;
  } catch (const ParseError& error) {
    err << "error: " << error.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& error) {
    err << "error: " << error.what() << "\n";
    return kExitParse;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return kExitOther;
  }
  return kExitOk;
}

}  // namespace chunker::cli
