// Shared test helpers: independent reference implementations (spelled-out
// numbers, path enumeration, relation tables, word edit distance) and small
// random machine generators. Everything here is deliberately written
// differently from the library code it checks.

#pragma once

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "itnkit/fst.hpp"
#include "itnkit/weight.hpp"

namespace testutil {

/// Spells n in plain English without "and" ("one hundred twenty three").
/// Matches the spoken forms the cardinal grammar accepts.
inline std::string spell_cardinal(std::uint64_t n) {
  static const std::array<const char*, 20> small = {
      "zero",    "one",     "two",       "three",    "four",
      "five",    "six",     "seven",     "eight",    "nine",
      "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
      "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
  static const std::array<const char*, 10> tens = {
      "",      "",      "twenty",  "thirty", "forty",
      "fifty", "sixty", "seventy", "eighty", "ninety"};
  if (n < 20) return small[n];
  if (n < 100) {
    std::string out = tens[n / 10];
    if (n % 10) out += std::string(" ") + small[n % 10];
    return out;
  }
  if (n < 1000) {
    std::string out = std::string(small[n / 100]) + " hundred";
    if (n % 100) out += " " + spell_cardinal(n % 100);
    return out;
  }
  struct Scale {
    std::uint64_t value;
    const char* word;
  };
  static const std::array<Scale, 3> scales = {
      {{1000000000ull, "billion"}, {1000000ull, "million"}, {1000ull, "thousand"}}};
  for (const auto& s : scales) {
    if (n >= s.value) {
      std::string out = spell_cardinal(n / s.value) + " " + s.word;
      if (n % s.value) out += " " + spell_cardinal(n % s.value);
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

/// Digits of n followed by the English ordinal suffix (1 -> "1st").
inline std::string spell_ordinal_digits(std::uint64_t n) {
  std::string digits = std::to_string(n);
  std::uint64_t mod100 = n % 100;
  std::uint64_t mod10 = n % 10;
  if (mod100 >= 11 && mod100 <= 13) return digits + "th";
  if (mod10 == 1) return digits + "st";
  if (mod10 == 2) return digits + "nd";
  if (mod10 == 3) return digits + "rd";
  return digits + "th";
}

// Random machines draw labels from a tiny alphabet and weights from the
// dyadic grid k/8, so tropical sums along short paths are exact doubles.

inline double dyadic_weight(std::mt19937& rng) {
  return std::uniform_int_distribution<int>(0, 16)(rng) / 8.0;
}

inline itnkit::Label random_label(std::mt19937& rng) {
  static const std::array<itnkit::Label, 4> labels = {itnkit::kEpsilon, 'a',
                                                      'b', 'c'};
  return labels[std::uniform_int_distribution<std::size_t>(0, 3)(rng)];
}

/// Random machine with up to 8 states; may contain cycles and epsilon
/// arcs. All weights are nonnegative. May have no accepting path at all.
inline itnkit::Fst random_fst(std::mt19937& rng) {
  itnkit::Fst f;
  int n = std::uniform_int_distribution<int>(1, 8)(rng);
  for (int i = 0; i < n; ++i) f.add_state();
  f.set_start(0);
  std::uniform_int_distribution<int> state_dist(0, n - 1);
  int arcs = std::uniform_int_distribution<int>(0, 2 * n)(rng);
  for (int i = 0; i < arcs; ++i) {
    f.add_arc(static_cast<itnkit::StateId>(state_dist(rng)),
              {random_label(rng), random_label(rng),
               itnkit::TropicalWeight(dyadic_weight(rng)),
               static_cast<itnkit::StateId>(state_dist(rng))});
  }
  int finals = std::uniform_int_distribution<int>(0, n)(rng);
  for (int i = 0; i < finals; ++i) {
    f.set_final(static_cast<itnkit::StateId>(state_dist(rng)),
                itnkit::TropicalWeight(dyadic_weight(rng)));
  }
  f.compile();
  return f;
}

/// Random acyclic machine: up to 6 states, arcs only from lower to higher
/// state ids, so state id order is a topological order.
inline itnkit::Fst random_acyclic_fst(std::mt19937& rng) {
  itnkit::Fst f;
  int n = std::uniform_int_distribution<int>(1, 6)(rng);
  for (int i = 0; i < n; ++i) f.add_state();
  f.set_start(0);
  int arcs = std::uniform_int_distribution<int>(0, 2 * n)(rng);
  for (int i = 0; i < arcs; ++i) {
    if (n < 2) break;
    int src = std::uniform_int_distribution<int>(0, n - 2)(rng);
    int dst = std::uniform_int_distribution<int>(src + 1, n - 1)(rng);
    f.add_arc(static_cast<itnkit::StateId>(src),
              {random_label(rng), random_label(rng),
               itnkit::TropicalWeight(dyadic_weight(rng)),
               static_cast<itnkit::StateId>(dst)});
  }
  int finals = std::uniform_int_distribution<int>(1, n)(rng);
  std::uniform_int_distribution<int> state_dist(0, n - 1);
  for (int i = 0; i < finals; ++i) {
    f.set_final(static_cast<itnkit::StateId>(state_dist(rng)),
                itnkit::TropicalWeight(dyadic_weight(rng)));
  }
  f.compile();
  return f;
}

/// Minimum accepting-path weight by layered dynamic programming over path
/// length: dist[k][s] is the cheapest way to reach s in exactly k arcs.
/// With nonnegative weights an optimal path never needs to repeat a state,
/// so max_arcs = 32 safely covers machines of up to 8 states. Returns
/// +infinity when no accepting path exists.
inline double min_path_weight_oracle(const itnkit::Fst& f, int max_arcs = 32) {
  const double inf = std::numeric_limits<double>::infinity();
  if (f.num_states() == 0) return inf;
  std::vector<double> dist(f.num_states(), inf);
  dist[f.start()] = 0.0;
  double best = inf;
  auto settle = [&](const std::vector<double>& d) {
    for (itnkit::StateId s = 0; s < f.num_states(); ++s) {
      if (d[s] == inf || !f.is_final(s)) continue;
      best = std::min(best, d[s] + f.final_weight(s).value());
    }
  };
  settle(dist);
  for (int k = 0; k < max_arcs; ++k) {
    std::vector<double> next(f.num_states(), inf);
    for (itnkit::StateId s = 0; s < f.num_states(); ++s) {
      if (dist[s] == inf) continue;
      for (const auto& arc : f.arcs(s)) {
        next[arc.nextstate] =
            std::min(next[arc.nextstate], dist[s] + arc.weight.value());
      }
    }
    settle(next);
    dist = std::move(next);
  }
  return best;
}

/// The weighted relation of an acyclic machine: every accepted
/// (input, output) string pair mapped to its cheapest path weight.
/// Epsilons contribute no characters. Throws on cyclic input.
using Relation = std::map<std::pair<std::string, std::string>, double>;

inline Relation relation_table(const itnkit::Fst& f) {
  Relation empty;
  if (f.num_states() == 0) return empty;
  // Kahn topological order; the suffix tables are filled back to front.
  std::vector<int> indegree(f.num_states(), 0);
  for (itnkit::StateId s = 0; s < f.num_states(); ++s) {
    for (const auto& arc : f.arcs(s)) indegree[arc.nextstate]++;
  }
  std::vector<itnkit::StateId> order;
  std::vector<itnkit::StateId> queue;
  for (itnkit::StateId s = 0; s < f.num_states(); ++s) {
    if (indegree[s] == 0) queue.push_back(s);
  }
  while (!queue.empty()) {
    itnkit::StateId s = queue.back();
    queue.pop_back();
    order.push_back(s);
    for (const auto& arc : f.arcs(s)) {
      if (--indegree[arc.nextstate] == 0) queue.push_back(arc.nextstate);
    }
  }
  if (order.size() != f.num_states())
    throw std::logic_error("relation_table: machine has a cycle");

  std::vector<Relation> table(f.num_states());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    itnkit::StateId s = *it;
    Relation& mine = table[s];
    if (f.is_final(s)) mine[{"", ""}] = f.final_weight(s).value();
    for (const auto& arc : f.arcs(s)) {
      for (const auto& [pair, w] : table[arc.nextstate]) {
        std::string x = pair.first;
        std::string y = pair.second;
        if (arc.ilabel != itnkit::kEpsilon)
          x.insert(x.begin(), static_cast<char>(arc.ilabel));
        if (arc.olabel != itnkit::kEpsilon)
          y.insert(y.begin(), static_cast<char>(arc.olabel));
        double total = arc.weight.value() + w;
        auto [pos, inserted] = mine.try_emplace({x, y}, total);
        if (!inserted) pos->second = std::min(pos->second, total);
      }
    }
  }
  return table[f.start()];
}

/// Min-plus join of two relations over the shared middle string: the
/// relation a composed machine must realize.
inline Relation join_relations(const Relation& a, const Relation& b) {
  Relation out;
  for (const auto& [xy, w1] : a) {
    for (const auto& [yz, w2] : b) {
      if (xy.second != yz.first) continue;
      double total = w1 + w2;
      auto [pos, inserted] = out.try_emplace({xy.first, yz.second}, total);
      if (!inserted) pos->second = std::min(pos->second, total);
    }
  }
  return out;
}

/// Word-level edit distance, written as plain recursion with memoization
/// to stay independent of the iterative row implementation under test.
inline std::size_t word_edit_distance_oracle(
    const std::vector<std::string>& ref, const std::vector<std::string>& hyp) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  auto solve = [&](auto&& self, std::size_t i, std::size_t j) -> std::size_t {
    if (i == ref.size()) return hyp.size() - j;
    if (j == hyp.size()) return ref.size() - i;
    auto key = std::make_pair(i, j);
    auto found = memo.find(key);
    if (found != memo.end()) return found->second;
    std::size_t best;
    if (ref[i] == hyp[j]) {
      best = self(self, i + 1, j + 1);
    } else {
      best = 1 + std::min({self(self, i + 1, j + 1), self(self, i + 1, j),
                           self(self, i, j + 1)});
    }
    memo[key] = best;
    return best;
  };
  return solve(solve, 0, 0);
}

inline std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t space = text.find(' ', pos);
    if (space == std::string::npos) space = text.size();
    if (space > pos) out.push_back(text.substr(pos, space - pos));
    pos = space + 1;
  }
  return out;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

/// Runs a shell command, capturing stdout and the exit code. Callers
/// append their own stderr redirection when they need it.
inline CliResult run_command(const std::string& command) {
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status)
                                                        : -1;
  return result;
}

}  // namespace testutil
