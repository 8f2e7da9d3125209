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

#include "itnkit/archive.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "itnkit/errors.hpp"

namespace itnkit {

namespace {

constexpr char kMagic[4] = {'W', 'F', 'S', 'T'};
constexpr std::uint32_t kVersion = 1;

// Values are written byte by byte, least significant first, so the file
// format does not depend on host endianness.
class Writer {
 public:
  explicit Writer(const std::string& path)
      : out_(path, std::ios::binary | std::ios::trunc), path_(path) {
    if (!out_) throw IoError("cannot open " + path + " for writing");
  }

  void bytes(const void* data, std::size_t len) {
    out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
  }

  template <typename T>
  void uint(T value) {
    unsigned char buf[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      buf[i] = static_cast<unsigned char>(value >> (8 * i));
    }
    bytes(buf, sizeof(T));
  }

  void f64(double value) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(value);
    uint(bits);
  }

  void finish() {
    out_.flush();
    if (!out_) throw IoError("write failure on " + path_);
  }

 private:
  std::ofstream out_;
  std::string path_;
};

class Reader {
 public:
  explicit Reader(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    data_.assign(std::istreambuf_iterator<char>(in),
                 std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failure on " + path);
  }

  void bytes(void* dst, std::size_t len) {
    if (pos_ + len > data_.size())
      throw TruncatedError("archive ends mid-record");
    std::memcpy(dst, data_.data() + pos_, len);
    pos_ += len;
  }

  template <typename T>
  T uint() {
    unsigned char buf[sizeof(T)];
    bytes(buf, sizeof(T));
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      value |= static_cast<T>(buf[i]) << (8 * i);
    }
    return value;
  }

  double f64() { return std::bit_cast<double>(uint<std::uint64_t>()); }

  bool exhausted() const { return pos_ == data_.size(); }

 private:
  std::string data_;
  std::size_t pos_ = 0;
};

}  // namespace

void save_archive(std::span<const NamedFst> grammars,
                  const std::string& path) {
  Writer w(path);
  w.bytes(kMagic, sizeof(kMagic));
  w.uint(kVersion);
  w.uint(static_cast<std::uint32_t>(grammars.size()));
  for (const NamedFst& g : grammars) {
    w.uint(static_cast<std::uint32_t>(g.name.size()));
    w.bytes(g.name.data(), g.name.size());
    const Fst& f = g.fst;
    w.uint(static_cast<std::uint64_t>(f.num_states()));
    // An empty machine has no start; 0 is written as a placeholder and
    // ignored by the loader.
    w.uint(static_cast<std::uint64_t>(
        f.num_states() == 0 ? 0 : f.start()));
    for (StateId s = 0; s < f.num_states(); ++s) {
      auto arcs = f.arcs(s);
      w.uint(static_cast<std::uint64_t>(arcs.size()));
      for (const Arc& arc : arcs) {
        w.uint(static_cast<std::uint16_t>(arc.ilabel));
        w.uint(static_cast<std::uint16_t>(arc.olabel));
        w.f64(arc.weight.value());
        w.uint(static_cast<std::uint64_t>(arc.nextstate));
      }
    }
    auto finals = f.finals();
    w.uint(static_cast<std::uint64_t>(finals.size()));
    for (auto [s, weight] : finals) {
      w.uint(static_cast<std::uint64_t>(s));
      w.f64(weight.value());
    }
  }
  w.finish();
}

std::vector<NamedFst> load_archive(const std::string& path) {
  Reader r(path);
  char magic[4];
  r.bytes(magic, sizeof(magic));
  if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw BadMagicError("not a grammar archive");
  std::uint32_t version = r.uint<std::uint32_t>();
  if (version != kVersion)
    throw BadVersionError("unsupported archive version " +
                          std::to_string(version));
  std::uint32_t count = r.uint<std::uint32_t>();
  std::vector<NamedFst> out;
  out.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint32_t name_len = r.uint<std::uint32_t>();
    std::string name(name_len, '\0');
    r.bytes(name.data(), name_len);

    std::uint64_t num_states = r.uint<std::uint64_t>();
    std::uint64_t start = r.uint<std::uint64_t>();
    if (num_states > 0 && start >= num_states)
      throw CorruptError("start state out of range in " + name);
    if (num_states > kNoState)
      throw CorruptError("state count too large in " + name);

    Fst f;
    for (std::uint64_t s = 0; s < num_states; ++s) f.add_state();
    if (num_states > 0) f.set_start(static_cast<StateId>(start));
    for (std::uint64_t s = 0; s < num_states; ++s) {
      std::uint64_t num_arcs = r.uint<std::uint64_t>();
      for (std::uint64_t j = 0; j < num_arcs; ++j) {
        std::uint16_t il = r.uint<std::uint16_t>();
        std::uint16_t ol = r.uint<std::uint16_t>();
        double weight = r.f64();
        std::uint64_t next = r.uint<std::uint64_t>();
        if (il > kMaxLabel || ol > kMaxLabel)
          throw CorruptError("arc label out of range in " + name);
        if (next >= num_states)
          throw CorruptError("arc target out of range in " + name);
        f.add_arc(static_cast<StateId>(s),
                  {il, ol, TropicalWeight(weight), static_cast<StateId>(next)});
      }
    }
    std::uint64_t num_finals = r.uint<std::uint64_t>();
    for (std::uint64_t j = 0; j < num_finals; ++j) {
      std::uint64_t s = r.uint<std::uint64_t>();
      double weight = r.f64();
      if (s >= num_states)
        throw CorruptError("final state out of range in " + name);
      f.set_final(static_cast<StateId>(s), TropicalWeight(weight));
    }
    f.compile();
    out.push_back({std::move(name), std::move(f)});
  }
  return out;
}

}  // namespace itnkit
