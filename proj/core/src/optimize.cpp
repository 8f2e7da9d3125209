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

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

#include "itnkit/errors.hpp"
#include "itnkit/ops.hpp"

namespace itnkit {

namespace {

/// Scratch space for per-source epsilon closures, reused across sources so
/// the whole removal stays near-linear.
struct EpsClosure {
  std::vector<TropicalWeight> dist;
  std::vector<char> queued;
  std::vector<StateId> touched;

  explicit EpsClosure(std::size_t n)
      : dist(n, TropicalWeight::zero()), queued(n, 0) {}

  /// Computes the cheapest epsilon:epsilon cost from src to every state
  /// reachable over epsilon:epsilon arcs alone, src itself at cost one().
  /// Fills `touched` with the reached states in ascending order. The
  /// relaxation budget rejects negative epsilon cycles, under which the
  /// closure is unbounded below.
  void run(const Fst& a, StateId src, std::uint64_t budget) {
    for (StateId s : touched) {
      dist[s] = TropicalWeight::zero();
      queued[s] = 0;
    }
    touched.clear();
    dist[src] = TropicalWeight::one();
    touched.push_back(src);
    std::deque<StateId> queue{src};
    queued[src] = 1;
    std::uint64_t relaxations = 0;
    while (!queue.empty()) {
      StateId s = queue.front();
      queue.pop_front();
      queued[s] = 0;
      for (const Arc& arc : a.arcs(s)) {
        if (arc.ilabel != kEpsilon || arc.olabel != kEpsilon) continue;
        TropicalWeight w = times(dist[s], arc.weight);
        if (w.value() < dist[arc.nextstate].value()) {
          if (++relaxations > budget)
            throw Error("optimize: negative epsilon cycle detected");
          if (dist[arc.nextstate].is_zero()) touched.push_back(arc.nextstate);
          dist[arc.nextstate] = w;
          if (!queued[arc.nextstate]) {
            queue.push_back(arc.nextstate);
            queued[arc.nextstate] = 1;
          }
        }
      }
    }
    std::sort(touched.begin(), touched.end());
  }
};

}  // namespace

Fst optimize(const Fst& a) {
  if (!a.compiled())
    throw std::logic_error("optimize: input machine is not sealed");
  Fst empty;
  empty.compile();
  if (a.num_states() == 0) return empty;

  std::size_t n = a.num_states();
  std::uint64_t budget =
      static_cast<std::uint64_t>(n) * (a.num_arcs() + 1) + n + 1;

  // Phase 1: epsilon removal. Replace each state's outgoing arcs with the
  // epsilon-closure of that state times every labeled arc leaving the
  // closure, and fold closure-reachable final weights into the state.
  std::vector<std::vector<Arc>> arcs(n);
  std::vector<TropicalWeight> final_w(n, TropicalWeight::zero());
  EpsClosure closure_scratch(n);
  for (StateId s = 0; s < n; ++s) {
    closure_scratch.run(a, s, budget);
    for (StateId t : closure_scratch.touched) {
      TropicalWeight via = closure_scratch.dist[t];
      for (const Arc& arc : a.arcs(t)) {
        if (arc.ilabel == kEpsilon && arc.olabel == kEpsilon) continue;
        arcs[s].push_back(
            {arc.ilabel, arc.olabel, times(via, arc.weight), arc.nextstate});
      }
      final_w[s] = plus(final_w[s], times(via, a.final_weight(t)));
    }
  }

  // Phase 2: trim. Keep states reachable from the start over the new arcs
  // that can also reach acceptance.
  std::vector<char> accessible(n, 0);
  {
    std::deque<StateId> queue{a.start()};
    accessible[a.start()] = 1;
    while (!queue.empty()) {
      StateId s = queue.front();
      queue.pop_front();
      for (const Arc& arc : arcs[s]) {
        if (!accessible[arc.nextstate]) {
          accessible[arc.nextstate] = 1;
          queue.push_back(arc.nextstate);
        }
      }
    }
  }
  std::vector<char> coaccessible(n, 0);
  {
    std::vector<std::vector<StateId>> rev(n);
    for (StateId s = 0; s < n; ++s) {
      for (const Arc& arc : arcs[s]) rev[arc.nextstate].push_back(s);
    }
    std::deque<StateId> queue;
    for (StateId s = 0; s < n; ++s) {
      if (!final_w[s].is_zero()) {
        coaccessible[s] = 1;
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      StateId t = queue.front();
      queue.pop_front();
      for (StateId s : rev[t]) {
        if (!coaccessible[s]) {
          coaccessible[s] = 1;
          queue.push_back(s);
        }
      }
    }
  }

  std::vector<StateId> remap(n, kNoState);
  StateId kept = 0;
  for (StateId s = 0; s < n; ++s) {
    if (accessible[s] && coaccessible[s]) remap[s] = kept++;
  }
  if (remap[a.start()] == kNoState) return empty;

  // Phase 3: rebuild with sorted, deduplicated arcs. Arcs identical up to
  // weight collapse to their cheapest representative, which cannot change
  // any pair's cheapest cost.
  Fst f;
  for (StateId i = 0; i < kept; ++i) f.add_state();
  f.set_start(remap[a.start()]);
  for (StateId s = 0; s < n; ++s) {
    if (remap[s] == kNoState) continue;
    std::map<std::tuple<Label, Label, StateId>, TropicalWeight> best;
    for (const Arc& arc : arcs[s]) {
      if (remap[arc.nextstate] == kNoState) continue;
      auto key = std::make_tuple(arc.ilabel, arc.olabel, remap[arc.nextstate]);
      auto [it, inserted] = best.try_emplace(key, arc.weight);
      if (!inserted) it->second = plus(it->second, arc.weight);
    }
    std::vector<Arc> sorted;
    sorted.reserve(best.size());
    for (const auto& [key, w] : best) {
      sorted.push_back(
          {std::get<0>(key), std::get<1>(key), w, std::get<2>(key)});
    }
    std::sort(sorted.begin(), sorted.end(), [](const Arc& x, const Arc& y) {
      return std::make_tuple(x.ilabel, x.olabel, x.weight.value(),
                             x.nextstate) <
             std::make_tuple(y.ilabel, y.olabel, y.weight.value(),
                             y.nextstate);
    });
    for (const Arc& arc : sorted) f.add_arc(remap[s], arc);
    if (!final_w[s].is_zero()) f.set_final(remap[s], final_w[s]);
  }
  f.compile();
  return f;
}

}  // namespace itnkit
