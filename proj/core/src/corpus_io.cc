// Copyright 2026 The patlas Authors.
//
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

#include "patlas/corpus_io.h"

#include <cstring>
#include <fstream>
#include <sstream>

#include "patlas/error.h"

namespace patlas {
namespace {

constexpr const char* kStage = "corpus";

class Writer {
 public:
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out_ += s;
  }
  void strs(const std::vector<std::string>& v) {
    u32(static_cast<std::uint32_t>(v.size()));
    for (const auto& s : v) str(s);
  }
  void raw(const char* p, std::size_t n) { out_.append(p, n); }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(const std::string& in) : in_(in) {}

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in_[pos_ + i])) << (8 * i);
    }
    pos_ += 4;
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in_[pos_ + i])) << (8 * i);
    }
    pos_ += 8;
    return v;
  }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  std::string str() {
    std::uint32_t n = u32();
    need(n);
    std::string s = in_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::vector<std::string> strs() {
    std::uint32_t n = u32();
    std::vector<std::string> v;
    v.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) v.push_back(str());
    return v;
  }
  void expect(const char* p, std::size_t n) {
    need(n);
    if (std::memcmp(in_.data() + pos_, p, n) != 0) {
      throw ParseError(kStage, 0, "not a patlas corpus (bad magic header)");
    }
    pos_ += n;
  }
  bool done() const { return pos_ == in_.size(); }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw ParseError(kStage, 0, "truncated corpus file");
  }

  const std::string& in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string encode_corpus(const std::vector<PatentRecord>& apps) {
  Writer w;
  w.raw(kCorpusMagic, sizeof(kCorpusMagic));
  w.u32(kCorpusVersion);
  w.u64(apps.size());
  for (const auto& p : apps) {
    w.str(p.application_id);
    w.i32(p.year);
    w.strs(p.ipc_subclasses);
    w.strs(p.merged_publication_ids);
    w.str(p.title);
    w.str(p.abstract);
    w.strs(p.first_assignee_names);
    w.str(p.first_assignee_address);
    w.u32(static_cast<std::uint32_t>(p.assignee_name_pool.size()));
    for (const auto& a : p.assignee_name_pool) {
      w.str(a.name);
      w.str(a.code);
    }
    w.u32(p.us_reassignment ? 1 : 0);
    if (p.us_reassignment) w.str(*p.us_reassignment);
  }
  return w.take();
}

std::vector<PatentRecord> decode_corpus(const std::string& bytes) {
  Reader r(bytes);
  r.expect(kCorpusMagic, sizeof(kCorpusMagic));
  std::uint32_t version = r.u32();
  if (version != kCorpusVersion) {
    throw ParseError(kStage, 0,
                     "unsupported corpus version " + std::to_string(version));
  }
  std::uint64_t n = r.u64();
  std::vector<PatentRecord> apps;
  apps.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) {
    PatentRecord p;
    p.application_id = r.str();
    p.year = r.i32();
    p.ipc_subclasses = r.strs();
    p.merged_publication_ids = r.strs();
    p.title = r.str();
    p.abstract = r.str();
    p.first_assignee_names = r.strs();
    p.first_assignee_address = r.str();
    std::uint32_t pool = r.u32();
    for (std::uint32_t k = 0; k < pool; ++k) {
      DwpiAssignee a;
      a.name = r.str();
      a.code = r.str();
      p.assignee_name_pool.push_back(std::move(a));
    }
    if (r.u32() != 0) p.us_reassignment = r.str();
    apps.push_back(std::move(p));
  }
  if (!r.done()) throw ParseError(kStage, 0, "trailing bytes after corpus records");
  return apps;
}

void write_corpus(const std::filesystem::path& path,
                  const std::vector<PatentRecord>& apps) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(kStage, "cannot write corpus '" + path.string() + "'");
  std::string bytes = encode_corpus(apps);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(kStage, "failed writing corpus '" + path.string() + "'");
}

std::vector<PatentRecord> read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(kStage, "cannot open corpus '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode_corpus(buf.str());
}

}  // namespace patlas
