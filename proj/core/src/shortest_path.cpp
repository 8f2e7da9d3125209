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
#include <limits>
#include <stdexcept>
#include <vector>

#include "itnkit/errors.hpp"
#include "itnkit/ops.hpp"

namespace itnkit {

namespace {

struct Dist {
  TropicalWeight weight = TropicalWeight::zero();
  std::uint64_t hops = std::numeric_limits<std::uint64_t>::max();
};

// Lexicographic (weight, hops) order. Tracking hop counts alongside
// weights serves two purposes: zero-weight cycles cannot improve a
// distance forever, and reconstruction can insist on a minimum-length
// path, which keeps the result simple.
bool better(TropicalWeight w, std::uint64_t h, const Dist& d) {
  if (w.value() < d.weight.value()) return true;
  return w == d.weight && h < d.hops;
}

struct ReverseArc {
  StateId src;
  TropicalWeight weight;
};

/// Reverse topological order of the arc graph, or empty if cyclic.
std::vector<StateId> reverse_topological(const Fst& a) {
  std::size_t n = a.num_states();
  std::vector<std::uint32_t> indegree(n, 0);
  for (StateId s = 0; s < n; ++s) {
    for (const Arc& arc : a.arcs(s)) ++indegree[arc.nextstate];
  }
  std::vector<StateId> order;
  order.reserve(n);
  std::deque<StateId> ready;
  for (StateId s = 0; s < n; ++s) {
    if (indegree[s] == 0) ready.push_back(s);
  }
  while (!ready.empty()) {
    StateId s = ready.front();
    ready.pop_front();
    order.push_back(s);
    for (const Arc& arc : a.arcs(s)) {
      if (--indegree[arc.nextstate] == 0) ready.push_back(arc.nextstate);
    }
  }
  if (order.size() != n) return {};
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace

Fst shortest_path(const Fst& a) {
  if (!a.compiled())
    throw std::logic_error("shortest_path: input machine is not sealed");
  if (a.num_states() == 0) throw NoPathError("machine accepts nothing");

  std::size_t n = a.num_states();

  // Backward distance: cheapest cost from each state to acceptance.
  std::vector<Dist> dist(n);
  for (StateId s = 0; s < n; ++s) {
    TropicalWeight w = a.final_weight(s);
    if (!w.is_zero()) dist[s] = {w, 0};
  }

  std::vector<StateId> topo = reverse_topological(a);
  if (!topo.empty()) {
    // Acyclic: one sweep in reverse topological order settles everything.
    for (StateId s : topo) {
      for (const Arc& arc : a.arcs(s)) {
        const Dist& d = dist[arc.nextstate];
        if (d.weight.is_zero()) continue;
        TropicalWeight w = times(arc.weight, d.weight);
        if (better(w, d.hops + 1, dist[s])) dist[s] = {w, d.hops + 1};
      }
    }
  } else {
    // Cyclic: label-correcting over the reverse graph. The relaxation
    // budget detects negative cycles, under which cheapest cost is
    // unbounded below.
    std::vector<std::vector<ReverseArc>> rev(n);
    for (StateId s = 0; s < n; ++s) {
      for (const Arc& arc : a.arcs(s)) {
        rev[arc.nextstate].push_back({s, arc.weight});
      }
    }
    std::deque<StateId> queue;
    std::vector<char> queued(n, 0);
    for (StateId s = 0; s < n; ++s) {
      if (!dist[s].weight.is_zero()) {
        queue.push_back(s);
        queued[s] = 1;
      }
    }
    std::uint64_t budget =
        static_cast<std::uint64_t>(n) * (a.num_arcs() + 1) + n + 1;
    std::uint64_t relaxations = 0;
    while (!queue.empty()) {
      StateId t = queue.front();
      queue.pop_front();
      queued[t] = 0;
      for (const ReverseArc& r : rev[t]) {
        TropicalWeight w = times(r.weight, dist[t].weight);
        if (better(w, dist[t].hops + 1, dist[r.src])) {
          if (++relaxations > budget)
            throw Error("shortest_path: negative cycle detected");
          dist[r.src] = {w, dist[t].hops + 1};
          if (!queued[r.src]) {
            queue.push_back(r.src);
            queued[r.src] = 1;
          }
        }
      }
    }
  }

  if (dist[a.start()].weight.is_zero())
    throw NoPathError("machine accepts nothing");

  // Forward reconstruction: from each state take the first arc, in stored
  // order, that lies on a cheapest minimum-hop path. Hop counts strictly
  // decrease along the walk, so it terminates at a final state.
  Fst path;
  StateId out_prev = path.add_state();
  path.set_start(out_prev);
  StateId cur = a.start();
  while (dist[cur].hops != 0) {
    bool advanced = false;
    for (const Arc& arc : a.arcs(cur)) {
      const Dist& d = dist[arc.nextstate];
      if (d.weight.is_zero()) continue;
      if (times(arc.weight, d.weight) == dist[cur].weight &&
          d.hops + 1 == dist[cur].hops) {
        StateId out_next = path.add_state();
        path.add_arc(out_prev, {arc.ilabel, arc.olabel, arc.weight, out_next});
        out_prev = out_next;
        cur = arc.nextstate;
        advanced = true;
        break;
      }
    }
    if (!advanced)
      throw std::logic_error("shortest_path: reconstruction lost the path");
  }
  path.set_final(out_prev, a.final_weight(cur));
  path.compile();
  return path;
}

std::string rewrite(std::string_view text, const Fst& grammar) {
  Fst lattice = compose(accept(text), grammar);
  Fst best = shortest_path(lattice);
  std::string out;
  StateId s = best.start();
  while (true) {
    auto arcs = best.arcs(s);
    if (arcs.empty()) break;
    if (arcs[0].olabel != kEpsilon)
      out.push_back(static_cast<char>(arcs[0].olabel));
    s = arcs[0].nextstate;
  }
  return out;
}

}  // namespace itnkit
