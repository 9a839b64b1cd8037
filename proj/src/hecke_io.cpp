/* Copyright (C) 2026 The congruon authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include "congruon/hecke_io.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "congruon/error.hpp"
#include "congruon/padic.hpp"

namespace congruon {

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  std::size_t a = s.find_first_not_of(ws);
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(ws);
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& msg, std::size_t line) {
  throw ParseError(msg + " at line " + std::to_string(line));
}

// "KEY k1=v1 k2=v2 ..." with exactly the listed keys, in any order.
Fields parse_fields(std::string_view rest, const std::vector<std::string>& keys, std::size_t line) {
  Fields out;
  std::set<std::string> seen;
  for (std::string_view tok : split(rest, ' ')) {
    if (tok.empty()) continue;
    std::size_t eq = tok.find('=');
    if (eq == std::string_view::npos || eq == 0) fail("malformed field '" + std::string(tok) + "'", line);
    std::string key(tok.substr(0, eq));
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) fail("unknown field '" + key + "'", line);
    if (!seen.insert(key).second) fail("repeated field '" + key + "'", line);
    out.emplace_back(key, std::string(tok.substr(eq + 1)));
  }
  for (const auto& k : keys)
    if (!seen.count(k)) fail("missing field '" + k + "'", line);
  return out;
}

const std::string& get(const Fields& f, const std::string& key) {
  for (const auto& [k, v] : f)
    if (k == key) return v;
  throw std::logic_error("field lookup");
}

Integer parse_integer(const std::string& s, std::size_t line, const std::string& what) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
    fail("bad integer for " + what + " '" + s + "'", line);
  return Integer(s);
}

long parse_long(const std::string& s, std::size_t line, const std::string& what) {
  Integer v = parse_integer(s, line, what);
  if (!v.fits_slong_p()) fail(what + " out of range", line);
  return v.get_si();
}

std::string token_field(const Fields& f, const std::string& key, std::size_t line) {
  const std::string& v = get(f, key);
  if (!valid_token(v)) fail("bad token for " + key + " '" + v + "'", line);
  return v;
}

bool parse_flag(const std::string& s, std::size_t line, const std::string& what) {
  if (s == "0") return false;
  if (s == "1") return true;
  fail(what + " must be 0 or 1", line);
}

// Splits a line into head word and remainder; empty head for blank lines.
std::pair<std::string_view, std::string_view> head(std::string_view line) {
  line = trim(line);
  std::size_t sp = line.find(' ');
  if (sp == std::string_view::npos) return {line, {}};
  return {line.substr(0, sp), line.substr(sp + 1)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return ss.str();
}

}  // namespace

bool valid_token(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    bool ok = (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '.' ||
              ch == '_' || ch == '-';
    if (!ok) return false;
  }
  return true;
}

NewformClass* CharPolyDataset::find(std::string_view id) {
  for (auto& f : forms)
    if (f.id == id) return &f;
  return nullptr;
}

const NewformClass* CharPolyDataset::find(std::string_view id) const {
  for (const auto& f : forms)
    if (f.id == id) return &f;
  return nullptr;
}

CharPolyDataset parse_dataset(std::string_view text) {
  CharPolyDataset d;
  std::size_t lineno = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++lineno;
    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto [kw, rest] = head(line);
    if (kw.empty()) continue;
    if (kw == "FORM") {
      Fields f = parse_fields(rest, {"id", "level", "weight", "degree"}, lineno);
      NewformClass c;
      c.id = token_field(f, "id", lineno);
      c.level = parse_long(get(f, "level"), lineno, "level");
      c.weight = parse_long(get(f, "weight"), lineno, "weight");
      long deg = parse_long(get(f, "degree"), lineno, "degree");
      if (c.level < 1 || c.weight < 1 || deg < 1 || deg > 1000000) fail("level, weight and degree must be positive", lineno);
      c.degree = static_cast<int>(deg);
      if (d.find(c.id)) fail("duplicate id '" + c.id + "'", lineno);
      d.forms.push_back(std::move(c));
    } else if (kw == "CP") {
      Fields f = parse_fields(rest, {"id", "p", "coeffs"}, lineno);
      std::string id = token_field(f, "id", lineno);
      NewformClass* c = d.find(id);
      if (!c) fail("CP for unknown id '" + id + "'", lineno);
      long p = parse_long(get(f, "p"), lineno, "p");
      if (p < 2 || !is_prime(Integer(p))) fail("p = " + get(f, "p") + " is not prime", lineno);
      if (!c->charpolys.empty() && c->charpolys.rbegin()->first >= p)
        fail("primes for '" + id + "' not strictly increasing", lineno);
      std::vector<Integer> coeffs;
      for (std::string_view t : split(get(f, "coeffs"), ','))
        coeffs.push_back(parse_integer(std::string(t), lineno, "coefficient"));
      if (static_cast<long>(coeffs.size()) != c->degree + 1) fail("degree mismatch", lineno);
      if (coeffs.back() != 1) fail("non-monic charpoly", lineno);
      c->charpolys.emplace(p, IntPoly(std::move(coeffs)));
    } else {
      fail("unknown record '" + std::string(kw) + "'", lineno);
    }
  }
  return d;
}

namespace {

void write_form(std::ostringstream& out, const NewformClass& c) {
  out << "FORM id=" << c.id << " level=" << c.level << " weight=" << c.weight << " degree=" << c.degree << '\n';
}

void write_cp(std::ostringstream& out, const std::string& id, long p, const IntPoly& f) {
  out << "CP id=" << id << " p=" << p << " coeffs=" << f.to_string() << '\n';
}

}  // namespace

std::string serialize_dataset(const CharPolyDataset& d) {
  std::ostringstream out;
  for (const auto& c : d.forms) {
    write_form(out, c);
    for (const auto& [p, f] : c.charpolys) write_cp(out, c.id, p, f);
  }
  return out.str();
}

CharPolyDataset read_dataset_file(const std::string& path) { return parse_dataset(read_file(path)); }

std::string export_class(NewformClass& cls, const std::vector<long>& primes) {
  std::vector<long> ps = primes;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  std::ostringstream out;
  write_form(out, cls);
  for (long p : ps) write_cp(out, cls.id, p, class_charpoly(cls, p));
  return out.str();
}

std::string to_string(DetailMethod m) {
  switch (m) {
    case DetailMethod::CongruenceNumber: return "cn";
    case DetailMethod::NewtonPolygon: return "np";
    case DetailMethod::Oldspace: return "oldspace";
  }
  return "cn";
}

std::string serialize_record(const ComparisonRecord& r) {
  std::ostringstream out;
  out << "RESULT f=" << r.f_id << " g=" << r.g_id << " Lminus=" << r.l_minus << " Lplus=" << r.l_plus
      << " sturm=" << r.sturm.get_num() << '/' << r.sturm.get_den() << " hyp314=" << (r.hypothesis_conditional ? 1 : 0)
      << " skipTl=" << (r.skipped_t_ell ? 1 : 0) << '\n';
  out << "#opts=" << (r.options_hash.empty() ? "-" : r.options_hash) << '\n';
  out << "#flags insufficient=" << r.insufficient_primes << " single=" << r.single_entry_gcd
      << " assertirred=" << r.assert_irreducible << " excluded=";
  if (r.excluded_primes.empty()) out << '-';
  for (std::size_t i = 0; i < r.excluded_primes.size(); ++i) out << (i ? "," : "") << r.excluded_primes[i];
  out << '\n';
  for (const auto& e : r.details) {
    if (e.diagnostic) out << "#diag ";
    out << "DETAIL f=" << r.f_id << " g=" << r.g_id << " p=" << e.p << " c=" << e.c << " d=" << e.d
        << " method=" << to_string(e.method) << '\n';
  }
  return out.str();
}

std::vector<ComparisonRecord> parse_records(std::string_view text) {
  std::vector<ComparisonRecord> out;
  std::size_t lineno = 0;
  auto current = [&]() -> ComparisonRecord& {
    if (out.empty()) fail("annotation before any RESULT", lineno);
    return out.back();
  };
  auto parse_detail = [&](std::string_view rest, bool diag) {
    Fields f = parse_fields(rest, {"f", "g", "p", "c", "d", "method"}, lineno);
    ComparisonRecord& r = current();
    if (get(f, "f") != r.f_id || get(f, "g") != r.g_id) fail("DETAIL does not match preceding RESULT", lineno);
    DetailEntry e;
    e.p = parse_long(get(f, "p"), lineno, "p");
    e.c = parse_integer(get(f, "c"), lineno, "c");
    e.d = parse_integer(get(f, "d"), lineno, "d");
    const std::string& m = get(f, "method");
    if (m == "cn") e.method = DetailMethod::CongruenceNumber;
    else if (m == "np") e.method = DetailMethod::NewtonPolygon;
    else if (m == "oldspace") e.method = DetailMethod::Oldspace;
    else fail("unknown method '" + m + "'", lineno);
    e.diagnostic = diag;
    r.details.push_back(std::move(e));
  };
  for (std::string_view raw : split(text, '\n')) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.rfind("#opts=", 0) == 0) {
      std::string h(line.substr(6));
      current().options_hash = h == "-" ? "" : h;
    } else if (line.rfind("#flags ", 0) == 0) {
      Fields f = parse_fields(line.substr(7), {"insufficient", "single", "assertirred", "excluded"}, lineno);
      ComparisonRecord& r = current();
      r.insufficient_primes = parse_flag(get(f, "insufficient"), lineno, "insufficient");
      r.single_entry_gcd = parse_flag(get(f, "single"), lineno, "single");
      r.assert_irreducible = parse_flag(get(f, "assertirred"), lineno, "assertirred");
      r.excluded_primes.clear();
      if (get(f, "excluded") != "-")
        for (std::string_view t : split(get(f, "excluded"), ','))
          r.excluded_primes.push_back(parse_long(std::string(t), lineno, "excluded prime"));
    } else if (line.rfind("#diag DETAIL ", 0) == 0) {
      parse_detail(line.substr(13), true);
    } else if (line[0] == '#') {
      continue;
    } else {
      auto [kw, rest] = head(line);
      if (kw == "RESULT") {
        Fields f = parse_fields(rest, {"f", "g", "Lminus", "Lplus", "sturm", "hyp314", "skipTl"}, lineno);
        ComparisonRecord r;
        r.f_id = token_field(f, "f", lineno);
        r.g_id = token_field(f, "g", lineno);
        r.l_minus = parse_integer(get(f, "Lminus"), lineno, "Lminus");
        r.l_plus = parse_integer(get(f, "Lplus"), lineno, "Lplus");
        const std::string& s = get(f, "sturm");
        std::size_t slash = s.find('/');
        if (slash == std::string::npos) fail("sturm must be num/den", lineno);
        Integer num = parse_integer(s.substr(0, slash), lineno, "sturm");
        Integer den = parse_integer(s.substr(slash + 1), lineno, "sturm");
        if (den <= 0) fail("sturm denominator must be positive", lineno);
        r.sturm = Rational(num, den);
        r.sturm.canonicalize();
        r.hypothesis_conditional = parse_flag(get(f, "hyp314"), lineno, "hyp314");
        r.skipped_t_ell = parse_flag(get(f, "skipTl"), lineno, "skipTl");
        out.push_back(std::move(r));
      } else if (kw == "DETAIL") {
        parse_detail(rest, false);
      } else {
        fail("unknown record '" + std::string(kw) + "'", lineno);
      }
    }
  }
  return out;
}

namespace {

// Serializes writers and compaction on a sidecar lock file so that renaming
// the store during compaction cannot strand a waiting writer on a stale inode.
class StoreLock {
 public:
  StoreLock(const std::string& path, int how) {
    std::string lp = path + ".lock";
    fd_ = ::open(lp.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw IoError("cannot open lock " + lp + ": " + std::strerror(errno));
    while (::flock(fd_, how) != 0) {
      if (errno == EINTR) continue;
      int e = errno;
      ::close(fd_);
      throw IoError("cannot lock " + lp + ": " + std::strerror(e));
    }
  }
  ~StoreLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  StoreLock(const StoreLock&) = delete;
  StoreLock& operator=(const StoreLock&) = delete;

 private:
  int fd_ = -1;
};

std::string read_if_exists(const std::string& path) {
  struct stat st {};
  if (::stat(path.c_str(), &st) != 0) {
    if (errno == ENOENT) return {};
    throw IoError("cannot stat " + path + ": " + std::strerror(errno));
  }
  return read_file(path);
}

void write_all(int fd, const std::string& data, const std::string& path) {
  std::size_t off = 0;
  while (off < data.size()) {
    ssize_t n = ::write(fd, data.data() + off, data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw IoError("write to " + path + " failed: " + std::strerror(errno));
    }
    off += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0) throw IoError("fsync of " + path + " failed: " + std::strerror(errno));
}

using Key = std::tuple<std::string, std::string, std::string>;
Key key_of(const ComparisonRecord& r) { return {r.f_id, r.g_id, r.options_hash}; }

}  // namespace

bool append_result(const std::string& path, const ComparisonRecord& r) {
  StoreLock lock(path, LOCK_EX);
  std::string existing = read_if_exists(path);
  std::vector<ComparisonRecord> recs;
  try {
    recs = parse_records(existing);
  } catch (const ParseError& e) {
    throw IoError("results store " + path + " is corrupt: " + e.what());
  }
  for (const auto& x : recs)
    if (key_of(x) == key_of(r)) return false;
  int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) throw IoError("cannot open " + path + ": " + std::strerror(errno));
  std::string data = serialize_record(r);
  if (!existing.empty() && existing.back() != '\n') data.insert(data.begin(), '\n');
  try {
    write_all(fd, data, path);
  } catch (...) {
    ::close(fd);
    throw;
  }
  ::close(fd);
  return true;
}

std::vector<ComparisonRecord> read_results(const std::string& path) {
  StoreLock lock(path, LOCK_SH);
  return parse_records(read_if_exists(path));
}

std::size_t compact_results(const std::string& path) {
  StoreLock lock(path, LOCK_EX);
  std::vector<ComparisonRecord> recs = parse_records(read_if_exists(path));
  std::set<Key> seen;
  std::string data;
  std::size_t kept = 0;
  for (const auto& r : recs) {
    if (!seen.insert(key_of(r)).second) continue;
    data += serialize_record(r);
    ++kept;
  }
  std::string tmp = path + ".tmp";
  int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) throw IoError("cannot open " + tmp + ": " + std::strerror(errno));
  try {
    write_all(fd, data, tmp);
  } catch (...) {
    ::close(fd);
    ::unlink(tmp.c_str());
    throw;
  }
  ::close(fd);
  if (::rename(tmp.c_str(), path.c_str()) != 0) {
    int e = errno;
    ::unlink(tmp.c_str());
    throw IoError("cannot replace " + path + ": " + std::strerror(e));
  }
  return kept;
}

}  // namespace congruon
