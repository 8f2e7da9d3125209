#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "itnkit/errors.hpp"
#include "itnkit/eval.hpp"

using namespace itnkit;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/itnkit_eval_") + name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  return path;
}

const InverseNormalizer& normalizer() {
  static InverseNormalizer itn =
      InverseNormalizer::from_data_dir(DataDir{ITNKIT_DATA_DIR});
  return itn;
}

}  // namespace

TEST_CASE("wer matches the documented arithmetic") {
  CHECK(wer("a b c", "a b c") == 0.0);
  CHECK(wer("a x c", "a b c") == doctest::Approx(1.0 / 3.0));
  CHECK(wer("a b", "a b c") == doctest::Approx(1.0 / 3.0));
  CHECK(wer("a b c d", "a b c") == doctest::Approx(1.0 / 3.0));
  // More errors than reference words pushes the rate above one.
  CHECK(wer("a b c d e", "a b") == doctest::Approx(1.5));
}

TEST_CASE("wer edge cases") {
  CHECK(wer("", "") == 0.0);
  CHECK(wer("", "a b") == doctest::Approx(1.0));
  CHECK_THROWS_AS(wer("something", ""), std::invalid_argument);
}

TEST_CASE("wer agrees with an independent edit distance") {
  std::mt19937 rng(99);
  const std::vector<std::string> vocab = {"a", "b", "c", "d"};
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::string> ref_words, hyp_words;
    int ref_len = len(rng);
    if (ref_len == 0) continue;  // empty reference throws, tested above
    for (int i = 0; i < ref_len; ++i) ref_words.push_back(vocab[pick(rng)]);
    int hyp_len = len(rng);
    for (int i = 0; i < hyp_len; ++i) hyp_words.push_back(vocab[pick(rng)]);
    auto join = [](const std::vector<std::string>& words) {
      std::string out;
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ' ';
        out += words[i];
      }
      return out;
    };
    double expected =
        static_cast<double>(
            testutil::word_edit_distance_oracle(ref_words, hyp_words)) /
        static_cast<double>(ref_words.size());
    CHECK(wer(join(hyp_words), join(ref_words)) ==
          doctest::Approx(expected));
  }
}

TEST_CASE("load_corpus groups records into sentences") {
  std::string path = write_temp("basic.tsv",
                                "CARDINAL\t23\ttwenty three\n"
                                "PLAIN\tdollars\t<self>\n"
                                "<eos>\t<eos>\n"
                                "PLAIN\thello\t<self>\n"
                                "<eos>\t<eos>\n");
  auto corpus = load_corpus(path);
  REQUIRE(corpus.size() == 2);
  REQUIRE(corpus[0].size() == 2);
  CHECK(corpus[0][0] ==
        EvalRecord{"CARDINAL", "twenty three", "23"});
  CHECK(corpus[0][1] == EvalRecord{"PLAIN", "dollars", "dollars"});
  REQUIRE(corpus[1].size() == 1);
  CHECK(corpus[1][0].written == "hello");
  std::remove(path.c_str());
}

TEST_CASE("load_corpus skips silence rows") {
  std::string path = write_temp("sil.tsv",
                                "PLAIN\thello\t<self>\n"
                                "PUNCT\t.\tsil\n"
                                "<eos>\t<eos>\n");
  auto corpus = load_corpus(path);
  REQUIRE(corpus.size() == 1);
  REQUIRE(corpus[0].size() == 1);
  CHECK(corpus[0][0].written == "hello");
  std::remove(path.c_str());
}

TEST_CASE("load_corpus relabels identical sides as PLAIN") {
  std::string path = write_temp("relabel.tsv",
                                "LETTERS\tokay\tokay\n"
                                "<eos>\t<eos>\n");
  auto corpus = load_corpus(path);
  REQUIRE(corpus.size() == 1);
  CHECK(corpus[0][0].semiotic_class == "PLAIN");
  std::remove(path.c_str());
}

TEST_CASE("load_corpus keeps the class when sides differ") {
  std::string path = write_temp("keep.tsv",
                                "CARDINAL\t23\ttwenty three\n"
                                "<eos>\t<eos>\n");
  auto corpus = load_corpus(path);
  CHECK(corpus[0][0].semiotic_class == "CARDINAL");
  std::remove(path.c_str());
}

TEST_CASE("load_corpus flushes a trailing sentence without eos") {
  std::string path = write_temp("trailing.tsv",
                                "PLAIN\tone\t<self>\n"
                                "<eos>\t<eos>\n"
                                "PLAIN\ttwo\t<self>\n");
  auto corpus = load_corpus(path);
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[1][0].written == "two");
  std::remove(path.c_str());
}

TEST_CASE("load_corpus rejects malformed rows with line numbers") {
  auto expect_error_line = [](const std::string& content, std::size_t line) {
    std::string path = write_temp("bad.tsv", content);
    try {
      load_corpus(path);
      FAIL("expected CorpusError");
    } catch (const CorpusError& e) {
      CHECK(e.line() == line);
    }
    std::remove(path.c_str());
  };
  // Too few columns.
  expect_error_line("PLAIN\tonly\n", 1);
  // Empty spoken side.
  expect_error_line("PLAIN\tx\t\n", 1);
  // Error on a later line is reported there.
  expect_error_line("PLAIN\tx\t<self>\nBADROW\n", 2);
}

TEST_CASE("load_corpus reports unreadable files") {
  CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.tsv"), IoError);
}

TEST_CASE("an empty corpus evaluates to an empty report") {
  std::string path = write_temp("empty.tsv", "");
  auto corpus = load_corpus(path);
  CHECK(corpus.empty());
  EvalReport report = evaluate(corpus, normalizer());
  CHECK(report.sentence.tokens == 0);
  CHECK(report.sentence.accuracy_percent() == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("evaluate scores a clean corpus at full marks") {
  std::string path = write_temp("clean.tsv",
                                "PLAIN\tit\t<self>\n"
                                "PLAIN\tcosts\t<self>\n"
                                "MONEY\t$3\tthree dollars\n"
                                "<eos>\t<eos>\n"
                                "CARDINAL\t23\ttwenty three\n"
                                "<eos>\t<eos>\n");
  auto corpus = load_corpus(path);
  EvalReport report = evaluate(corpus, normalizer());
  CHECK(report.sentence.tokens == 2);
  CHECK(report.sentence.correct == 2);
  CHECK(report.sentence.accuracy_percent() == 100.0);
  CHECK(report.sentence.wer_percent() == 0.0);
  bool saw_money = false;
  for (const auto& [name, stats] : report.classes) {
    if (name == "MONEY") {
      saw_money = true;
      CHECK(stats.tokens == 1);
      CHECK(stats.correct == 1);
      CHECK(stats.covered);
    }
  }
  CHECK(saw_money);
  std::remove(path.c_str());
}

TEST_CASE("unknown vocabulary degrades to a wrong answer, not a crash") {
  // "flibbers" is no unit the grammar knows, so the token comes out as a
  // cardinal plus a plain word and simply scores as incorrect.
  std::string path = write_temp("miss.tsv",
                                "MEASURE\t2 flb\ttwo flibbers\n"
                                "<eos>\t<eos>\n");
  auto corpus = load_corpus(path);
  EvalReport report = evaluate(corpus, normalizer());
  REQUIRE(report.classes.size() >= 1);
  bool saw_measure = false;
  for (const auto& [name, stats] : report.classes) {
    if (name == "MEASURE") {
      saw_measure = true;
      CHECK(stats.tokens == 1);
      CHECK(stats.correct == 0);
    }
  }
  CHECK(saw_measure);
  CHECK(report.sentence.correct == 0);
  std::remove(path.c_str());
}

TEST_CASE("evaluate falls back to the raw spoken string when classify fails") {
  // A double quote cannot be classified at all (the word class excludes
  // it), so the pipeline throws and evaluation substitutes the spoken
  // text as the hypothesis.
  std::string path = write_temp("failsoft.tsv",
                                "MEASURE\t2 flb\ttwo \"flibbers\"\n"
                                "<eos>\t<eos>\n");
  auto corpus = load_corpus(path);
  EvalReport report = evaluate(corpus, normalizer());
  REQUIRE(report.sentence.tokens == 1);
  CHECK(report.sentence.correct == 0);
  // The fallback hypothesis is the spoken side verbatim; against the
  // two-word reference "2 flb" both words differ, so the summed distance
  // is exactly 2.
  bool saw_measure = false;
  for (const auto& [name, stats] : report.classes) {
    if (name == "MEASURE") {
      saw_measure = true;
      CHECK(stats.edit_distance == 2);
      CHECK(stats.reference_words == 2);
    }
  }
  CHECK(saw_measure);
  std::remove(path.c_str());
}

TEST_CASE("evaluate marks classes without a grammar as uncovered") {
  std::string path = write_temp("uncovered.tsv",
                                "TIME\t3:00 pm\tthree p m\n"
                                "<eos>\t<eos>\n");
  auto corpus = load_corpus(path);
  EvalReport report = evaluate(corpus, normalizer());
  bool saw_time = false;
  for (const auto& [name, stats] : report.classes) {
    if (name == "TIME") {
      saw_time = true;
      CHECK_FALSE(stats.covered);
    }
  }
  CHECK(saw_time);
  // The table flags the row for human readers.
  CHECK(report.table().find("(no grammar)") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("report table and machine lines carry the same numbers") {
  std::string path = write_temp("fmt.tsv",
                                "CARDINAL\t23\ttwenty three\n"
                                "<eos>\t<eos>\n");
  auto corpus = load_corpus(path);
  EvalReport report = evaluate(corpus, normalizer());
  std::string table = report.table();
  std::string machine = report.machine_lines();
  CHECK(table.find("CARDINAL") != std::string::npos);
  CHECK(table.find("SENTENCE") != std::string::npos);
  CHECK(machine.find("CARDINAL\t1\t100.00\t0.0") != std::string::npos);
  CHECK(machine.find("SENTENCE\t1\t100.00\t0.0") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("sentence scoring joins tokens with single spaces") {
  // One wrong token poisons its sentence but not the other sentence.
  std::string path = write_temp("joined.tsv",
                                "PLAIN\thello\t<self>\n"
                                "MEASURE\t2 flb\ttwo flibbers\n"
                                "<eos>\t<eos>\n"
                                "PLAIN\tfine\t<self>\n"
                                "<eos>\t<eos>\n");
  auto corpus = load_corpus(path);
  EvalReport report = evaluate(corpus, normalizer());
  CHECK(report.sentence.tokens == 2);
  CHECK(report.sentence.correct == 1);
  std::remove(path.c_str());
}
