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
#include <fstream>
#include <map>
#include <stdexcept>
#include <tuple>

#include "itnkit/errors.hpp"
#include "itnkit/ops.hpp"

namespace itnkit {

namespace {

void require_sealed(const Fst& a, const char* op) {
  if (!a.compiled())
    throw std::logic_error(std::string(op) + ": input machine is not sealed");
}

/// Appends a copy of src into dst, returning the state id offset. dst
/// takes no start/final information; callers wire those explicitly.
StateId splice(Fst& dst, const Fst& src,
               std::vector<std::pair<StateId, TropicalWeight>>* finals_out) {
  StateId offset = static_cast<StateId>(dst.num_states());
  for (std::size_t s = 0; s < src.num_states(); ++s) dst.add_state();
  for (StateId s = 0; s < src.num_states(); ++s) {
    for (const Arc& arc : src.arcs(s)) {
      dst.add_arc(offset + s, {arc.ilabel, arc.olabel, arc.weight,
                               offset + arc.nextstate});
    }
  }
  if (finals_out) {
    for (auto [s, w] : src.finals()) finals_out->emplace_back(offset + s, w);
  }
  return offset;
}

}  // namespace

Fst accept(std::string_view s) { return cross(s, s); }

Fst cross(std::string_view input, std::string_view output, TropicalWeight w) {
  Fst f;
  StateId cur = f.add_state();
  f.set_start(cur);
  std::size_t n = std::max(input.size(), output.size());
  for (std::size_t i = 0; i < n; ++i) {
    Label il = i < input.size()
                   ? static_cast<Label>(static_cast<unsigned char>(input[i]))
                   : kEpsilon;
    Label ol = i < output.size()
                   ? static_cast<Label>(static_cast<unsigned char>(output[i]))
                   : kEpsilon;
    StateId next = f.add_state();
    f.add_arc(cur, {il, ol, TropicalWeight::one(), next});
    cur = next;
  }
  f.set_final(cur, w);
  f.compile();
  return f;
}

Fst insert_str(std::string_view s, TropicalWeight w) {
  return cross("", s, w);
}

Fst delete_str(std::string_view s, TropicalWeight w) {
  return cross(s, "", w);
}

Fst byte_class(const std::function<bool(unsigned char)>& pred) {
  Fst f;
  StateId s0 = f.add_state();
  StateId s1 = f.add_state();
  f.set_start(s0);
  f.set_final(s1);
  for (int b = 1; b <= kMaxLabel; ++b) {
    if (pred(static_cast<unsigned char>(b))) {
      Label l = static_cast<Label>(b);
      f.add_arc(s0, {l, l, TropicalWeight::one(), s1});
    }
  }
  f.compile();
  return f;
}

Fst fst_union(const Fst& a, const Fst& b) {
  require_sealed(a, "fst_union");
  require_sealed(b, "fst_union");
  Fst f;
  StateId start = f.add_state();
  f.set_start(start);
  for (const Fst* part : {&a, &b}) {
    if (part->num_states() == 0) continue;
    std::vector<std::pair<StateId, TropicalWeight>> finals;
    StateId offset = splice(f, *part, &finals);
    f.add_arc(start,
              {kEpsilon, kEpsilon, TropicalWeight::one(),
               offset + part->start()});
    for (auto [s, w] : finals) f.set_final(s, w);
  }
  f.compile();
  return f;
}

Fst concat(const Fst& a, const Fst& b) {
  require_sealed(a, "concat");
  require_sealed(b, "concat");
  Fst f;
  if (a.num_states() == 0 || b.num_states() == 0) {
    f.compile();
    return f;
  }
  std::vector<std::pair<StateId, TropicalWeight>> a_finals;
  StateId a_off = splice(f, a, &a_finals);
  std::vector<std::pair<StateId, TropicalWeight>> b_finals;
  StateId b_off = splice(f, b, &b_finals);
  f.set_start(a_off + a.start());
  // The bridge arc carries a's final weight so path cost is unchanged.
  for (auto [s, w] : a_finals) {
    f.add_arc(s, {kEpsilon, kEpsilon, w, b_off + b.start()});
  }
  for (auto [s, w] : b_finals) f.set_final(s, w);
  f.compile();
  return f;
}

Fst closure(const Fst& a) {
  require_sealed(a, "closure");
  Fst f;
  StateId start = f.add_state();
  f.set_start(start);
  f.set_final(start);  // zero repetitions
  if (a.num_states() > 0) {
    std::vector<std::pair<StateId, TropicalWeight>> finals;
    StateId offset = splice(f, a, &finals);
    f.add_arc(start,
              {kEpsilon, kEpsilon, TropicalWeight::one(), offset + a.start()});
    for (auto [s, w] : finals) {
      f.set_final(s, w);
      f.add_arc(s, {kEpsilon, kEpsilon, w, offset + a.start()});
    }
  }
  f.compile();
  return f;
}

Fst closure_plus(const Fst& a) {
  require_sealed(a, "closure_plus");
  Fst f;
  if (a.num_states() == 0) {
    f.compile();
    return f;
  }
  std::vector<std::pair<StateId, TropicalWeight>> finals;
  StateId offset = splice(f, a, &finals);
  f.set_start(offset + a.start());
  for (auto [s, w] : finals) {
    f.set_final(s, w);
    f.add_arc(s, {kEpsilon, kEpsilon, w, offset + a.start()});
  }
  f.compile();
  return f;
}

Fst closure(const Fst& a, std::size_t lo, std::size_t hi) {
  require_sealed(a, "closure");
  if (lo > hi) throw std::invalid_argument("closure: lo > hi");
  Fst optional = fst_union(a, accept(""));
  Fst f = accept("");
  for (std::size_t i = 0; i < lo; ++i) f = concat(f, a);
  for (std::size_t i = lo; i < hi; ++i) f = concat(f, optional);
  return f;
}

Fst string_map(
    const std::vector<std::tuple<std::string, std::string, TropicalWeight>>&
        entries) {
  Fst f;
  StateId start = f.add_state();
  f.set_start(start);
  // Shared input trie. Only unweighted identity-position arcs are safe to
  // reuse, which is all the trie ever adds.
  std::map<std::pair<StateId, Label>, StateId> trie;
  for (const auto& [input, output, weight] : entries) {
    StateId cur = start;
    for (char c : input) {
      Label l = static_cast<Label>(static_cast<unsigned char>(c));
      auto key = std::make_pair(cur, l);
      auto it = trie.find(key);
      if (it != trie.end()) {
        cur = it->second;
      } else {
        StateId next = f.add_state();
        f.add_arc(cur, {l, kEpsilon, TropicalWeight::one(), next});
        trie.emplace(key, next);
        cur = next;
      }
    }
    // Output tail is private to the entry so outputs never interleave.
    for (char c : output) {
      Label l = static_cast<Label>(static_cast<unsigned char>(c));
      StateId next = f.add_state();
      f.add_arc(cur, {kEpsilon, l, TropicalWeight::one(), next});
      cur = next;
    }
    f.set_final(cur, plus(weight, f.final_weight(cur)));
  }
  f.compile();
  return f;
}

Fst string_map_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::tuple<std::string, std::string, TropicalWeight>> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
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
    if (cols.size() > 2)
      throw TsvError(path + ": more than two columns", lineno);
    const std::string& input = cols[0];
    const std::string& output = cols.size() == 2 ? cols[1] : cols[0];
    entries.emplace_back(input, output, TropicalWeight::one());
  }
  if (in.bad()) throw IoError("read failure on " + path);
  return string_map(entries);
}

Fst project(const Fst& a, ProjectSide side) {
  require_sealed(a, "project");
  Fst f;
  for (std::size_t s = 0; s < a.num_states(); ++s) f.add_state();
  if (a.num_states() > 0) f.set_start(a.start());
  for (StateId s = 0; s < a.num_states(); ++s) {
    for (const Arc& arc : a.arcs(s)) {
      Label l = side == ProjectSide::kInput ? arc.ilabel : arc.olabel;
      f.add_arc(s, {l, l, arc.weight, arc.nextstate});
    }
    TropicalWeight w = a.final_weight(s);
    if (!w.is_zero()) f.set_final(s, w);
  }
  f.compile();
  return f;
}

Fst add_weight(const Fst& a, TropicalWeight w) {
  return concat(insert_str("", w), a);
}

}  // namespace itnkit
