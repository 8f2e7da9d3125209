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

#include "itnkit/grammar.hpp"

#include <stdexcept>

#include "itnkit/ops.hpp"

namespace itnkit {

Fst delete_space() {
  Fst one_space;
  StateId s0 = one_space.add_state();
  StateId s1 = one_space.add_state();
  one_space.set_start(s0);
  one_space.set_final(s1);
  one_space.add_arc(s0, {' ', kEpsilon, TropicalWeight::one(), s1});
  one_space.compile();
  return closure(one_space);
}

Fst delete_extra_space() {
  Fst one_space;
  StateId s0 = one_space.add_state();
  StateId s1 = one_space.add_state();
  one_space.set_start(s0);
  one_space.set_final(s1);
  one_space.add_arc(s0, {' ', kEpsilon, TropicalWeight::one(), s1});
  one_space.compile();
  return closure_plus(one_space);
}

Fst insert_space() { return insert_str(" "); }

Fst not_quote_plus() {
  return closure_plus(byte_class([](unsigned char b) { return b != '"'; }));
}

Fst add_tokens(const Fst& body, const std::string& name) {
  if (name.empty()) throw std::invalid_argument("add_tokens: empty name");
  return concat(concat(insert_str(name + " { "), body), insert_str(" }"));
}

Fst delete_tokens(const Fst& body, const std::string& name) {
  if (name.empty()) throw std::invalid_argument("delete_tokens: empty name");
  return concat(concat(delete_str(name + " { "), body), delete_str(" }"));
}

}  // namespace itnkit
