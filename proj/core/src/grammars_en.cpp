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

#include "itnkit/grammars_en.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

#include "itnkit/ops.hpp"

namespace itnkit {

namespace {

// Grammar bodies read far better as expressions; these file-local
// operators mirror the usual regex notation.
Fst operator+(const Fst& a, const Fst& b) { return concat(a, b); }
Fst operator|(const Fst& a, const Fst& b) { return fst_union(a, b); }

Fst ins(std::string_view s) { return insert_str(s); }
Fst del(std::string_view s) { return delete_str(s); }

/// Identity over each character in set, one byte at a time.
Fst chars_identity(std::string_view set) {
  std::vector<std::tuple<std::string, std::string, TropicalWeight>> entries;
  for (char c : set) {
    entries.emplace_back(std::string(1, c), std::string(1, c),
                         TropicalWeight::one());
  }
  return string_map(entries);
}

/// Spoken cardinal words to a digit string, untagged. Covers 0 through
/// 999,999,999,999 with no grouping separators. "and" is deletable only
/// directly after "hundred".
Fst cardinal_number_graph(const DataDir& data) {
  Fst digit = string_map_file(data.file("numbers/digit.tsv"));
  Fst teen = string_map_file(data.file("numbers/teen.tsv"));
  Fst ties = string_map_file(data.file("numbers/ties.tsv"));
  Fst zero = string_map_file(data.file("numbers/zero.tsv"));
  Fst sp = delete_space();

  // 1..99 as spoken, and the same padded to exactly two digits.
  Fst two_digit = digit | teen | (ties + ins("0")) | (ties + sp + digit);
  Fst pad2 =
      (ins("0") + digit) | teen | (ties + ins("0")) | (ties + sp + digit);

  Fst opt_and = accept("") | (del("and") + sp);
  Fst hundreds =
      digit + sp + del("hundred") + (ins("00") | (sp + opt_and + pad2));

  // 1..999 as spoken, and the same padded to exactly three digits.
  Fst under_thousand = two_digit | hundreds;
  Fst pad3 = (ins("0") + pad2) | hundreds;

  // Each quantity tail completes the lower segments; a spoken-out segment
  // contributes its padded digits, a missing one contributes zeros.
  Fst t_tail = (sp + pad3) | ins("000");
  Fst m_tail = (sp + pad3 + sp + del("thousand") + t_tail) |
               (ins("000") + sp + pad3) | ins("000000");
  Fst b_tail = (sp + pad3 + sp + del("million") + m_tail) |
               (ins("000") + sp + pad3 + sp + del("thousand") + t_tail) |
               (ins("000000") + sp + pad3) | ins("000000000");

  Fst graph = zero | under_thousand |
              (under_thousand + sp + del("thousand") + t_tail) |
              (under_thousand + sp + del("million") + m_tail) |
              (under_thousand + sp + del("billion") + b_tail);
  return optimize(graph);
}

/// Spoken ordinal words to a digit string, untagged (no suffix). The
/// rewriter maps the ordinal suffix back to its cardinal form ("fourth" to
/// "four", "thirtieth" to "thirty", irregulars per the exceptions file);
/// composing with the cardinal graph discards rewrites of non-ordinals.
Fst ordinal_number_graph(const DataDir& data, const Fst& cardinal) {
  Fst exceptions =
      string_map_file(data.file("ordinals/suffix-exceptions.tsv"));
  Fst suffix = exceptions | cross("ieth", "y") | cross("th", "");
  // Spoken cardinals only use lowercase letters and spaces, so the
  // pass-through closure can stay that narrow.
  Fst head = closure(byte_class(
      [](unsigned char b) { return (b >= 'a' && b <= 'z') || b == ' '; }));
  return optimize(compose(optimize(head + suffix), cardinal));
}

/// Fractional digit sequence: each spoken word is one digit character,
/// with "o"/"oh" admitted as zero. Requires at least one digit.
Fst fraction_number_graph(const DataDir& data) {
  Fst digit = string_map_file(data.file("numbers/digit.tsv"));
  Fst zero = string_map_file(data.file("numbers/zero.tsv"));
  Fst single = digit | zero | cross("o", "0") | cross("oh", "0");
  return optimize(closure(single + delete_space()) + single);
}

/// Amount fields shared by money and measure: integer_part plus an
/// optional fractional_part for spoken decimals.
Fst amount_fields(const Fst& cardinal, const Fst& fraction_graph) {
  Fst sp = delete_space();
  Fst integer = ins("integer_part: \"") + cardinal + ins("\"");
  Fst fraction = sp + del("point") + sp + ins(" fractional_part: \"") +
                 fraction_graph + ins("\"");
  return integer + (accept("") | fraction);
}

/// Verbalizer side of amount_fields: digits, then "." and the fraction
/// digits when the optional field is present.
Fst amount_values() {
  Fst integer = del("integer_part: \"") + not_quote_plus() + del("\"");
  Fst fraction = delete_space() + del("fractional_part: \"") + ins(".") +
                 not_quote_plus() + del("\"");
  return integer + (accept("") | fraction);
}

/// Appends the English ordinal suffix to a digit string: st/nd/rd after
/// final 1/2/3 except when the penultimate digit is 1, th otherwise.
Fst ordinal_suffix_appender() {
  Fst any = chars_identity("0123456789");
  Fst single = (chars_identity("1") + ins("st")) |
               (chars_identity("2") + ins("nd")) |
               (chars_identity("3") + ins("rd")) |
               (chars_identity("0456789") + ins("th"));
  Fst teens = chars_identity("1") + any + ins("th");
  Fst last_two = (chars_identity("023456789") + single) | teens;
  return (closure(any) + last_two) | single;
}

Fst cardinal_classify_fst(const Fst& cardinal) {
  Fst body = ins("integer: \"") + cardinal + ins("\"");
  return optimize(add_tokens(body, "cardinal"));
}

Fst ordinal_classify_fst(const Fst& ordinal) {
  Fst body = ins("integer: \"") + ordinal + ins("\"");
  return optimize(add_tokens(body, "ordinal"));
}

Fst decimal_classify_fst(const Fst& cardinal, const Fst& fraction) {
  Fst sp = delete_space();
  Fst body = ins("integer_part: \"") + cardinal + ins("\"") + sp +
             del("point") + sp + ins(" fractional_part: \"") + fraction +
             ins("\"");
  return optimize(add_tokens(body, "decimal"));
}

Fst money_classify_fst(const DataDir& data, const Fst& cardinal,
                       const Fst& fraction) {
  Fst currency = string_map_file(data.file("money/currency.tsv"));
  Fst body = amount_fields(cardinal, fraction) + delete_space() +
             ins(" currency: \"") + currency + ins("\"");
  return optimize(add_tokens(body, "money"));
}

Fst measure_classify_fst(const DataDir& data, const Fst& cardinal,
                         const Fst& fraction) {
  Fst units = string_map_file(data.file("measure/units.tsv"));
  Fst body = amount_fields(cardinal, fraction) + delete_space() +
             ins(" units: \"") + units + ins("\"");
  return optimize(add_tokens(body, "measure"));
}

Fst date_classify_fst(const DataDir& data, const Fst& ordinal) {
  Fst months = string_map_file(data.file("date/months.tsv"));
  Fst sp = delete_space();
  Fst month_day = ins("month: \"") + months + ins("\"") + sp +
                  ins(" day: \"") + ordinal + ins("\"");
  Fst day_month = del("the") + sp + ins("day: \"") + ordinal + ins("\"") +
                  sp + del("of") + sp + ins(" month: \"") + months +
                  ins("\"");
  // preserve_order keeps verbalization in spoken field order, so "may
  // third" and "the third of may" render differently.
  Fst body = (month_day | day_month) + ins(" preserve_order: true");
  return optimize(add_tokens(body, "date"));
}

Fst whitelist_classify_fst(const DataDir& data) {
  Fst table = string_map_file(data.file("whitelist.tsv"));
  Fst body = ins("name: \"") + table + ins("\"");
  return optimize(add_tokens(body, "whitelist"));
}

Fst word_classify_fst() {
  // Catch-all: any run of non-space bytes, identity. '"' is excluded so
  // the value always satisfies the no-quote serialization rule.
  Fst run = closure_plus(
      byte_class([](unsigned char b) { return b != ' ' && b != '"'; }));
  Fst body = ins("name: \"") + run + ins("\"");
  return optimize(add_tokens(body, "word"));
}

}  // namespace

WeightPolicy WeightPolicy::defaults() {
  WeightPolicy p;
  p.class_weights = {
      {"whitelist", 1.01}, {"money", 1.04},   {"measure", 1.05},
      {"date", 1.06},      {"decimal", 1.08}, {"ordinal", 1.09},
      {"cardinal", 1.10},
  };
  p.word_weight = 100.0;
  return p;
}

void WeightPolicy::validate() const {
  auto it = class_weights.find("whitelist");
  if (it == class_weights.end())
    throw std::invalid_argument("weight policy: missing whitelist weight");
  double whitelist = it->second;
  for (const auto& [name, w] : class_weights) {
    if (!(w > 1.0 && w <= 2.0))
      throw std::invalid_argument("weight policy: weight for " + name +
                                  " outside (1, 2]");
    if (name != "whitelist" && w <= whitelist)
      throw std::invalid_argument(
          "weight policy: whitelist must be the strict minimum");
  }
  if (!(word_weight > 2.0))
    throw std::invalid_argument("weight policy: word weight must exceed 2");
}

GrammarClass cardinal_classify(const DataDir& data) {
  return {"cardinal", GrammarKind::kClassify,
          cardinal_classify_fst(cardinal_number_graph(data))};
}

GrammarClass cardinal_verbalize() {
  Fst body = del("integer: \"") + not_quote_plus() + del("\"");
  return {"cardinal", GrammarKind::kVerbalize,
          optimize(delete_tokens(body, "cardinal"))};
}

GrammarClass ordinal_classify(const DataDir& data) {
  return {"ordinal", GrammarKind::kClassify,
          ordinal_classify_fst(
              ordinal_number_graph(data, cardinal_number_graph(data)))};
}

GrammarClass ordinal_verbalize() {
  Fst body = del("integer: \"") + ordinal_suffix_appender() + del("\"");
  return {"ordinal", GrammarKind::kVerbalize,
          optimize(delete_tokens(body, "ordinal"))};
}

GrammarClass decimal_classify(const DataDir& data) {
  return {"decimal", GrammarKind::kClassify,
          decimal_classify_fst(cardinal_number_graph(data),
                               fraction_number_graph(data))};
}

GrammarClass decimal_verbalize() {
  Fst body = del("integer_part: \"") + not_quote_plus() + del("\"") +
             delete_space() + del("fractional_part: \"") + ins(".") +
             not_quote_plus() + del("\"");
  return {"decimal", GrammarKind::kVerbalize,
          optimize(delete_tokens(body, "decimal"))};
}

GrammarClass money_classify(const DataDir& data) {
  return {"money", GrammarKind::kClassify,
          money_classify_fst(data, cardinal_number_graph(data),
                             fraction_number_graph(data))};
}

GrammarClass money_verbalize() {
  // Expects currency first; the classifier emits the amount first, so the
  // pipeline reaches this order by field reordering.
  Fst body = del("currency: \"") + not_quote_plus() + del("\"") +
             delete_space() + amount_values();
  return {"money", GrammarKind::kVerbalize,
          optimize(delete_tokens(body, "money"))};
}

GrammarClass measure_classify(const DataDir& data) {
  return {"measure", GrammarKind::kClassify,
          measure_classify_fst(data, cardinal_number_graph(data),
                               fraction_number_graph(data))};
}

GrammarClass measure_verbalize() {
  Fst body = amount_values() + delete_space() + del("units: \"") + ins(" ") +
             not_quote_plus() + del("\"");
  return {"measure", GrammarKind::kVerbalize,
          optimize(delete_tokens(body, "measure"))};
}

GrammarClass date_classify(const DataDir& data) {
  return {"date", GrammarKind::kClassify,
          date_classify_fst(
              data, ordinal_number_graph(data, cardinal_number_graph(data)))};
}

GrammarClass date_verbalize() {
  Fst month_first = del("month: \"") + not_quote_plus() + del("\"") +
                    delete_space() + del("day: \"") + ins(" ") +
                    not_quote_plus() + del("\"");
  Fst day_first = del("day: \"") + not_quote_plus() + del("\"") +
                  delete_space() + del("month: \"") + ins(" ") +
                  not_quote_plus() + del("\"");
  Fst body = (month_first | day_first) + delete_space() +
             del("preserve_order: true");
  return {"date", GrammarKind::kVerbalize,
          optimize(delete_tokens(body, "date"))};
}

GrammarClass whitelist_classify(const DataDir& data) {
  return {"whitelist", GrammarKind::kClassify, whitelist_classify_fst(data)};
}

GrammarClass word_classify() {
  return {"word", GrammarKind::kClassify, word_classify_fst()};
}

GrammarClass plain_verbalize() {
  Fst value = del("name: \"") + not_quote_plus() + del("\"");
  Fst body = delete_tokens(value, "word") | delete_tokens(value, "whitelist");
  return {"plain", GrammarKind::kVerbalize, optimize(body)};
}

Fst classify_final(const DataDir& data, const WeightPolicy& policy) {
  policy.validate();
  // The number graphs are the expensive pieces; build each exactly once.
  Fst cardinal = cardinal_number_graph(data);
  Fst ordinal = ordinal_number_graph(data, cardinal);
  Fst fraction = fraction_number_graph(data);
  std::vector<std::pair<std::string, Fst>> classes;
  classes.emplace_back("whitelist", whitelist_classify_fst(data));
  classes.emplace_back("money", money_classify_fst(data, cardinal, fraction));
  classes.emplace_back("measure",
                       measure_classify_fst(data, cardinal, fraction));
  classes.emplace_back("date", date_classify_fst(data, ordinal));
  classes.emplace_back("decimal", decimal_classify_fst(cardinal, fraction));
  classes.emplace_back("ordinal", ordinal_classify_fst(ordinal));
  classes.emplace_back("cardinal", cardinal_classify_fst(cardinal));

  Fst token;
  bool first = true;
  for (const auto& [name, fst] : classes) {
    auto it = policy.class_weights.find(name);
    if (it == policy.class_weights.end())
      throw std::invalid_argument("weight policy: no weight for " + name);
    Fst weighted =
        add_weight(add_tokens(fst, "tokens"), TropicalWeight(it->second));
    token = first ? weighted : (token | weighted);
    first = false;
  }
  token = token | add_weight(add_tokens(word_classify_fst(), "tokens"),
                             TropicalWeight(policy.word_weight));

  // Spoken tokens are separated by one-or-more spaces, output blocks by
  // exactly one.
  Fst sep = delete_extra_space() + insert_space();
  Fst sentence = token + closure(sep + token);
  return optimize(delete_space() + (accept("") | sentence) + delete_space());
}

Fst verbalize_final() {
  Fst token = delete_tokens(cardinal_verbalize().fst, "tokens") |
              delete_tokens(ordinal_verbalize().fst, "tokens") |
              delete_tokens(decimal_verbalize().fst, "tokens") |
              delete_tokens(money_verbalize().fst, "tokens") |
              delete_tokens(measure_verbalize().fst, "tokens") |
              delete_tokens(date_verbalize().fst, "tokens") |
              delete_tokens(plain_verbalize().fst, "tokens");
  Fst sentence = token + closure(accept(" ") + token);
  return optimize(accept("") | sentence);
}

}  // namespace itnkit
