// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "itnkit/archive.hpp"
#include "itnkit/errors.hpp"
#include "itnkit/eval.hpp"
#include "itnkit/grammars_en.hpp"
#include "itnkit/pipeline.hpp"

namespace {

// Exit codes: 0 success, 1 usage, 2 I/O, 3 corpus/archive/data format.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitFormat = 3;

#ifndef ITNKIT_DEFAULT_DATA_DIR
#define ITNKIT_DEFAULT_DATA_DIR "core/data/en"
#endif

struct GrammarSource {
  std::string data_dir = ITNKIT_DEFAULT_DATA_DIR;
  std::string archive;

  itnkit::InverseNormalizer load() const {
    if (!archive.empty())
      return itnkit::InverseNormalizer::from_archive(archive);
    return itnkit::InverseNormalizer::from_data_dir(
        itnkit::DataDir{data_dir});
  }
};

void add_grammar_flags(CLI::App& cmd, GrammarSource& source,
                       bool allow_archive) {
  CLI::Option* data =
      cmd.add_option("--data-dir", source.data_dir,
                     "Grammar data directory (TSV files)");
  if (allow_archive) {
    CLI::Option* archive = cmd.add_option(
        "--archive", source.archive, "Load precompiled grammars from archive");
    archive->excludes(data);
    data->excludes(archive);
  }
}

int run_normalize(const GrammarSource& source, const std::string& text,
                  bool have_text, const std::string& input_file,
                  bool verbose) {
  itnkit::InverseNormalizer itn = source.load();

  auto emit = [&](const std::string& line) {
    if (verbose) {
      try {
        std::cerr << itn.classify(line) << '\n';
      } catch (const itnkit::Error& e) {
        std::cerr << "classify failed: " << e.what() << '\n';
      }
    }
    try {
      std::cout << itn.inverse_normalize(line) << '\n';
    } catch (const itnkit::Error&) {
      // Unmatched input passes through untouched.
      std::cout << line << '\n';
    }
  };

  if (have_text) {
    emit(text);
    return kExitOk;
  }
  if (!input_file.empty()) {
    std::ifstream in(input_file, std::ios::binary);
    if (!in) throw itnkit::IoError("cannot open " + input_file);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      emit(line);
    }
    if (in.bad()) throw itnkit::IoError("read failure on " + input_file);
    return kExitOk;
  }
  std::string line;
  while (std::getline(std::cin, line)) emit(line);
  return kExitOk;
}

int run_export(const std::string& data_dir, const std::string& out) {
  itnkit::DataDir data{data_dir};
  std::vector<itnkit::NamedFst> grammars;
  grammars.push_back(
      {"classify",
       itnkit::classify_final(data, itnkit::WeightPolicy::defaults())});
  grammars.push_back({"verbalize", itnkit::verbalize_final()});
  itnkit::save_archive(grammars, out);
  return kExitOk;
}

int run_evaluate(const GrammarSource& source, const std::string& corpus_path) {
  itnkit::InverseNormalizer itn = source.load();
  std::vector<itnkit::EvalSentence> corpus = itnkit::load_corpus(corpus_path);
  itnkit::EvalReport report = itnkit::evaluate(corpus, itn);
  std::cout << report.table() << '\n' << report.machine_lines();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse text normalization over weighted transducers"};
  app.require_subcommand(1);

  GrammarSource normalize_source;
  std::string normalize_text;
  std::string normalize_input_file;
  bool normalize_verbose = false;
  CLI::App* normalize =
      app.add_subcommand("normalize", "Spoken text to written form");
  CLI::Option* text_opt =
      normalize->add_option("TEXT", normalize_text, "Text to normalize");
  normalize->add_option("--input-file", normalize_input_file,
                        "Read input lines from a file");
  normalize->add_flag("--verbose", normalize_verbose,
                      "Print the tagged intermediate to stderr");
  add_grammar_flags(*normalize, normalize_source, true);

  GrammarSource export_source;
  std::string export_out;
  CLI::App* exporter =
      app.add_subcommand("export", "Write compiled grammars to an archive");
  exporter->add_option("--out", export_out, "Archive output path")
      ->required();
  add_grammar_flags(*exporter, export_source, false);

  GrammarSource eval_source;
  std::string eval_corpus;
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Score the pipeline on a corpus file");
  evaluate->add_option("--corpus", eval_corpus, "Corpus file to score")
      ->required();
  add_grammar_flags(*evaluate, eval_source, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (normalize->parsed()) {
      return run_normalize(normalize_source, normalize_text,
                           text_opt->count() > 0, normalize_input_file,
                           normalize_verbose);
    }
    if (exporter->parsed()) {
      return run_export(export_source.data_dir, export_out);
    }
    return run_evaluate(eval_source, eval_corpus);
  } catch (const itnkit::CorpusError& e) {
    std::cerr << "corpus error (line " << e.line() << "): " << e.what()
              << '\n';
    return kExitFormat;
  } catch (const itnkit::ArchiveError& e) {
    std::cerr << "archive error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const itnkit::TsvError& e) {
    std::cerr << "data error (line " << e.line() << "): " << e.what() << '\n';
    return kExitFormat;
  } catch (const itnkit::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
