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

#include "itnkit/eval.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "itnkit/errors.hpp"

namespace itnkit {

namespace {

constexpr std::array<const char*, 8> kCoveredClasses = {
    "PLAIN", "WHITELIST", "CARDINAL", "ORDINAL",
    "DECIMAL", "MEASURE",  "MONEY",   "DATE"};

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> words;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t space = text.find(' ', pos);
    if (space == std::string::npos) space = text.size();
    if (space > pos) words.push_back(text.substr(pos, space - pos));
    pos = space + 1;
  }
  return words;
}

std::size_t word_edit_distance(const std::vector<std::string>& hyp,
                               const std::vector<std::string>& ref) {
  std::vector<std::size_t> prev(ref.size() + 1);
  std::vector<std::size_t> row(ref.size() + 1);
  for (std::size_t j = 0; j <= ref.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= hyp.size(); ++i) {
    row[0] = i;
    for (std::size_t j = 1; j <= ref.size(); ++j) {
      std::size_t subst = prev[j - 1] + (hyp[i - 1] == ref[j - 1] ? 0 : 1);
      row[j] = std::min({prev[j] + 1, row[j - 1] + 1, subst});
    }
    std::swap(prev, row);
  }
  return prev[ref.size()];
}

std::string format_row(const std::string& name, const ClassStats& s,
                       bool flag_uncovered) {
  char buf[160];
  const char* note = (!s.covered && flag_uncovered) ? "  (no grammar)" : "";
  std::snprintf(buf, sizeof(buf), "%-10s %8zu %10.2f %8.1f%s", name.c_str(),
                s.tokens, s.accuracy_percent(), s.wer_percent(), note);
  return buf;
}

}  // namespace

std::vector<EvalSentence> load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);

  std::vector<EvalSentence> corpus;
  EvalSentence current;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string> cols;
    std::size_t pos = 0;
    while (true) {
      std::size_t tab = line.find('\t', pos);
      if (tab == std::string::npos) {
        cols.push_back(line.substr(pos));
        break;
      }
      cols.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }

    if (cols[0] == "<eos>") {
      if (cols.size() != 2 || cols[1] != "<eos>")
        throw CorpusError("malformed sentence terminator", lineno);
      if (!current.empty()) {
        corpus.push_back(std::move(current));
        current.clear();
      }
      continue;
    }
    if (cols.size() != 3)
      throw CorpusError("expected 3 tab-separated columns", lineno);

    EvalRecord record{cols[0], cols[2], cols[1]};
    if (record.spoken == "sil") continue;
    if (record.spoken == "<self>") record.spoken = record.written;
    if (record.spoken.empty())
      throw CorpusError("empty spoken form", lineno);
    if (record.spoken == record.written) record.semiotic_class = "PLAIN";
    current.push_back(std::move(record));
  }
  if (in.bad()) throw IoError("read failure on " + path);
  if (!current.empty()) corpus.push_back(std::move(current));
  return corpus;
}

double wer(const std::string& hypothesis, const std::string& reference) {
  std::vector<std::string> hyp = split_words(hypothesis);
  std::vector<std::string> ref = split_words(reference);
  if (ref.empty()) {
    if (hyp.empty()) return 0.0;
    throw std::invalid_argument("wer: empty reference, nonempty hypothesis");
  }
  return static_cast<double>(word_edit_distance(hyp, ref)) /
         static_cast<double>(ref.size());
}

EvalReport evaluate(const std::vector<EvalSentence>& corpus,
                    const InverseNormalizer& pipeline) {
  std::set<std::string> covered(kCoveredClasses.begin(),
                                kCoveredClasses.end());
  std::map<std::string, ClassStats> by_class;
  EvalReport report;

  for (const EvalSentence& sentence : corpus) {
    std::string sent_hyp;
    std::string sent_ref;
    for (const EvalRecord& record : sentence) {
      std::string hyp;
      try {
        hyp = pipeline.inverse_normalize(record.spoken);
      } catch (const Error&) {
        // Fail-soft: unmatched input passes through untouched.
        hyp = record.spoken;
      }

      ClassStats& stats = by_class[record.semiotic_class];
      stats.covered = covered.count(record.semiotic_class) > 0;
      stats.tokens += 1;
      if (hyp == record.written) stats.correct += 1;
      std::vector<std::string> ref_words = split_words(record.written);
      stats.edit_distance += word_edit_distance(split_words(hyp), ref_words);
      stats.reference_words += ref_words.size();

      if (!sent_hyp.empty()) sent_hyp += ' ';
      sent_hyp += hyp;
      if (!sent_ref.empty()) sent_ref += ' ';
      sent_ref += record.written;
    }
    report.sentence.tokens += 1;
    if (sent_hyp == sent_ref) report.sentence.correct += 1;
    std::vector<std::string> ref_words = split_words(sent_ref);
    report.sentence.edit_distance +=
        word_edit_distance(split_words(sent_hyp), ref_words);
    report.sentence.reference_words += ref_words.size();
  }

  // Canonical classes first in fixed order, then anything else the corpus
  // mentions, alphabetically.
  for (const char* name : kCoveredClasses) {
    auto it = by_class.find(name);
    if (it != by_class.end()) {
      report.classes.emplace_back(it->first, it->second);
      by_class.erase(it);
    }
  }
  for (const auto& [name, stats] : by_class) {
    report.classes.emplace_back(name, stats);
  }
  return report;
}

std::string EvalReport::table() const {
  std::string out;
  char header[160];
  std::snprintf(header, sizeof(header), "%-10s %8s %10s %8s", "class",
                "tokens", "accuracy", "wer");
  out += header;
  out += '\n';
  out += format_row("SENTENCE", sentence, false);
  out += '\n';
  for (const auto& [name, stats] : classes) {
    out += format_row(name, stats, true);
    out += '\n';
  }
  return out;
}

std::string EvalReport::machine_lines() const {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "SENTENCE\t%zu\t%.2f\t%.1f",
                sentence.tokens, sentence.accuracy_percent(),
                sentence.wer_percent());
  out += buf;
  out += '\n';
  for (const auto& [name, stats] : classes) {
    std::snprintf(buf, sizeof(buf), "%s\t%zu\t%.2f\t%.1f", name.c_str(),
                  stats.tokens, stats.accuracy_percent(), stats.wer_percent());
    out += buf;
    out += '\n';
  }
  return out;
}

}  // namespace itnkit
