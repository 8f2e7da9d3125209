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

#include "itnkit/pipeline.hpp"

#include <algorithm>
#include <numeric>

#include "itnkit/archive.hpp"
#include "itnkit/errors.hpp"
#include "itnkit/ops.hpp"

namespace itnkit {

namespace {

/// Strict cursor over a tagged serialization. Any mismatch is a
/// TagParseError carrying the current byte offset.
class TagCursor {
 public:
  explicit TagCursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  std::size_t offset() const { return pos_; }

  void expect(std::string_view literal) {
    if (text_.substr(pos_, literal.size()) != literal)
      throw TagParseError("expected \"" + std::string(literal) + "\"", pos_);
    pos_ += literal.size();
  }

  bool try_consume(std::string_view literal) {
    if (text_.substr(pos_, literal.size()) != literal) return false;
    pos_ += literal.size();
    return true;
  }

  char peek() const {
    if (done()) throw TagParseError("unexpected end of input", pos_);
    return text_[pos_];
  }

  /// Identifier: one-or-more bytes from [a-z_].
  std::string identifier() {
    std::size_t begin = pos_;
    while (pos_ < text_.size() &&
           ((text_[pos_] >= 'a' && text_[pos_] <= 'z') || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == begin) throw TagParseError("expected identifier", pos_);
    return std::string(text_.substr(begin, pos_ - begin));
  }

  /// Double-quoted value; no escaping, so any byte but '"' is legal.
  std::string quoted() {
    expect("\"");
    std::size_t begin = pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
    if (pos_ == text_.size())
      throw TagParseError("unterminated quoted value", begin);
    std::string value(text_.substr(begin, pos_ - begin));
    ++pos_;
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Token parse_token(TagCursor& cur) {
  Token token;
  cur.expect("tokens { ");
  token.class_name = cur.identifier();
  cur.expect(" { ");
  while (true) {
    std::string key = cur.identifier();
    cur.expect(": ");
    if (key == "preserve_order") {
      if (cur.try_consume("true")) {
        token.preserve_order = true;
      } else if (cur.try_consume("false")) {
        token.preserve_order = false;
      } else {
        throw TagParseError("preserve_order must be true or false",
                            cur.offset());
      }
      cur.expect(" }");
      break;
    }
    token.fields.emplace_back(key, cur.quoted());
    cur.expect(" ");
    if (cur.try_consume("}")) break;
  }
  cur.expect(" }");
  if (token.fields.empty())
    throw TagParseError("token has no fields", cur.offset());
  return token;
}

void serialize_token(const Token& token,
                     const std::vector<std::size_t>& order, std::string& out) {
  out += "tokens { ";
  out += token.class_name;
  out += " {";
  for (std::size_t i : order) {
    out += ' ';
    out += token.fields[i].first;
    out += ": \"";
    out += token.fields[i].second;
    out += '"';
  }
  if (token.preserve_order) out += " preserve_order: true";
  out += " } }";
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

std::vector<Token> parse_tagged(std::string_view tagged) {
  std::vector<Token> tokens;
  TagCursor cur(tagged);
  if (cur.done()) return tokens;
  tokens.push_back(parse_token(cur));
  while (!cur.done()) {
    cur.expect(" ");
    tokens.push_back(parse_token(cur));
  }
  return tokens;
}

std::string serialize_tokens(const std::vector<Token>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    serialize_token(tokens[i], identity_order(tokens[i].fields.size()), out);
  }
  return out;
}

ReorderingGenerator::ReorderingGenerator(std::vector<Token> tokens)
    : tokens_(std::move(tokens)), odometer_(tokens_.size(), 0) {
  orders_.reserve(tokens_.size());
  for (const Token& token : tokens_) {
    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t> order = identity_order(token.fields.size());
    candidates.push_back(order);
    if (!token.preserve_order) {
      // next_permutation from the identity enumerates ascending
      // permutation-index order, exactly the contract.
      while (std::next_permutation(order.begin(), order.end())) {
        candidates.push_back(order);
        if (candidates.size() >= kMaxCandidates) break;
      }
    }
    orders_.push_back(std::move(candidates));
  }
}

std::optional<std::string> ReorderingGenerator::next() {
  if (exhausted_ || yielded_ >= kMaxCandidates) return std::nullopt;
  std::string out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i > 0) out += ' ';
    serialize_token(tokens_[i], orders_[i][odometer_[i]], out);
  }
  ++yielded_;
  // Advance the odometer with the rightmost token fastest, which walks
  // the per-token permutation indices in lexicographic order.
  std::size_t i = tokens_.size();
  while (i > 0) {
    --i;
    if (++odometer_[i] < orders_[i].size()) break;
    odometer_[i] = 0;
    if (i == 0) exhausted_ = true;
  }
  if (tokens_.empty()) exhausted_ = true;
  return out;
}

InverseNormalizer::InverseNormalizer(Fst classify, Fst verbalize)
    : classify_(std::move(classify)), verbalize_(std::move(verbalize)) {}

InverseNormalizer InverseNormalizer::from_data_dir(const DataDir& data,
                                                   const WeightPolicy& policy) {
  return InverseNormalizer(classify_final(data, policy), verbalize_final());
}

InverseNormalizer InverseNormalizer::from_archive(const std::string& path) {
  std::vector<NamedFst> grammars = load_archive(path);
  Fst* classify = nullptr;
  Fst* verbalize = nullptr;
  for (NamedFst& g : grammars) {
    if (g.name == "classify") classify = &g.fst;
    if (g.name == "verbalize") verbalize = &g.fst;
  }
  if (!classify || !verbalize)
    throw CorruptError("archive lacks classify/verbalize grammars");
  return InverseNormalizer(std::move(*classify), std::move(*verbalize));
}

std::string InverseNormalizer::classify(std::string_view text) const {
  return rewrite(text, classify_);
}

std::string InverseNormalizer::verbalize(
    std::string_view serialization) const {
  return rewrite(serialization, verbalize_);
}

std::string InverseNormalizer::inverse_normalize(std::string_view text) const {
  std::string tagged = classify(text);
  ReorderingGenerator candidates(parse_tagged(tagged));
  while (auto serialization = candidates.next()) {
    try {
      return verbalize(*serialization);
    } catch (const NoPathError&) {
      // This field order is not verbalizable; try the next one.
    }
  }
  throw NoVerbalizationError("no field reordering verbalizes: " + tagged);
}

}  // namespace itnkit
