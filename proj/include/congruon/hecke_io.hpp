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
#pragma once

// Line-oriented text formats.
//
// Datasets:
//   FORM id=<token> level=<int> weight=<int> degree=<int>
//   CP id=<token> p=<prime> coeffs=<c0>,<c1>,...,<cd>
// Results:
//   RESULT f=<token> g=<token> Lminus=<int> Lplus=<int> sturm=<num>/<den> hyp314=<0|1> skipTl=<0|1>
//   DETAIL f=<token> g=<token> p=<prime> c=<int> d=<int> method=<cn|np|oldspace>
// '#' starts a comment. Result blocks carry annotations as "#opts=", "#flags"
// and "#diag" comment lines, which the reader understands and other tools
// may ignore.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "congruon/intpoly.hpp"
#include "congruon/modsym.hpp"

namespace congruon {

struct CharPolyDataset {
  std::vector<NewformClass> forms;

  NewformClass* find(std::string_view id);
  const NewformClass* find(std::string_view id) const;
};

/// Throws ParseError("line <k>: ...") on malformed input, unknown or
/// duplicate ids, primes out of order, non-monic or wrong-degree charpolys.
CharPolyDataset parse_dataset(std::string_view text);
/// Canonical text: forms in order, each followed by its CP lines by prime.
std::string serialize_dataset(const CharPolyDataset& d);
CharPolyDataset read_dataset_file(const std::string& path);

/// FORM line plus CP lines for the requested primes (computed on demand for
/// engine classes). Throws PreconditionError naming a missing prime.
std::string export_class(NewformClass& cls, const std::vector<long>& primes);

bool valid_token(std::string_view s);

enum class DetailMethod { CongruenceNumber, NewtonPolygon, Oldspace };
std::string to_string(DetailMethod m);

struct DetailEntry {
  long p = 0;
  Integer c;  // 0 when the charpolys share a root at p
  Integer d;  // prod over ell | L+ of ell^{d_p}
  DetailMethod method = DetailMethod::CongruenceNumber;
  bool diagnostic = false;  // written as "#diag DETAIL ..." and not used in the bounds
  friend bool operator==(const DetailEntry&, const DetailEntry&) = default;
};

struct ComparisonRecord {
  std::string f_id, g_id;
  Integer l_minus = 1, l_plus = 0;
  Rational sturm;
  bool hypothesis_conditional = true;
  bool skipped_t_ell = false;
  bool assert_irreducible = false;
  bool insufficient_primes = false;
  bool single_entry_gcd = false;
  std::vector<long> excluded_primes;
  std::vector<DetailEntry> details;
  std::string options_hash;
  friend bool operator==(const ComparisonRecord&, const ComparisonRecord&) = default;
};

std::string serialize_record(const ComparisonRecord& r);
/// Reads every record in a results text (the inverse of serialize_record
/// applied to concatenated records).
std::vector<ComparisonRecord> parse_records(std::string_view text);

/// Appends unless a record with the same (f, g, options hash) is present.
/// Holds an exclusive advisory lock on the file while checking and writing.
/// Returns false for a duplicate. Throws IoError.
bool append_result(const std::string& path, const ComparisonRecord& r);
std::vector<ComparisonRecord> read_results(const std::string& path);
/// Rewrites the store with one record per key (first occurrence wins) and no
/// stray comments; returns the number of records kept.
std::size_t compact_results(const std::string& path);

}  // namespace congruon
