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

// congruon command line. Exit codes: 0 ok, 1 internal, 2 parse, 3 not
// coprime, 4 cap exceeded, 5 precondition, 6 I/O.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "congruon/congruon.h"

namespace {

struct Failure {
  cg_status status;
  std::string message;
};

cg_context* g_ctx = nullptr;

void check(cg_status s) {
  if (s != CG_OK) throw Failure{s, cg_last_error(g_ctx)};
}

[[noreturn]] void fail(cg_status s, const std::string& msg) { throw Failure{s, msg}; }

std::string take(char* s) {
  std::string out = s ? s : "";
  cg_string_free(s);
  return out;
}

using PolyPtr = std::unique_ptr<cg_poly, decltype(&cg_poly_free)>;
using DatasetPtr = std::unique_ptr<cg_dataset, decltype(&cg_dataset_free)>;

PolyPtr parse_poly(const std::string& text) {
  cg_poly* p = nullptr;
  check(cg_poly_parse(g_ctx, text.c_str(), &p));
  return PolyPtr(p, cg_poly_free);
}

std::string poly_text(const cg_poly* p, bool pretty) {
  char* s = nullptr;
  check(cg_poly_to_string(g_ctx, p, pretty ? 1 : 0, &s));
  return take(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

long parse_long(const std::string& s, const std::string& what) {
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0') fail(CG_ERR_PARSE, "bad " + what + " '" + s + "'");
  return v;
}

// Datasets opened so far, by source. "@N" is the engine at level N.
std::map<std::string, DatasetPtr> g_sources;

cg_dataset* open_source(const std::string& src) {
  auto it = g_sources.find(src);
  if (it != g_sources.end()) return it->second.get();
  cg_dataset* d = nullptr;
  if (!src.empty() && src[0] == '@') {
    long n = parse_long(src.substr(1), "level");
    cg_level* lvl = nullptr;
    check(cg_level_build(g_ctx, n, &lvl));
    std::unique_ptr<cg_level, decltype(&cg_level_free)> guard(lvl, cg_level_free);
    check(cg_level_classes(g_ctx, lvl, &d));
  } else {
    check(cg_dataset_read_file(g_ctx, src.c_str(), &d));
  }
  return g_sources.emplace(src, DatasetPtr(d, cg_dataset_free)).first->second.get();
}

// "<file>#<id>" or "@<level>#<id>".
std::pair<cg_dataset*, std::string> open_form(const std::string& spec) {
  std::size_t hash = spec.rfind('#');
  if (hash == std::string::npos || hash == 0 || hash + 1 == spec.size())
    fail(CG_ERR_PARSE, "form reference must look like file#id, got '" + spec + "'");
  return {open_source(spec.substr(0, hash)), spec.substr(hash + 1)};
}

std::vector<long> primes_upto(long b) {
  std::vector<long> out;
  for (long p = 2; p <= b; ++p) {
    bool prime = true;
    for (long q = 2; q * q <= p; ++q)
      if (p % q == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(p);
  }
  return out;
}

int run_congpoly(const std::string& ptext, const std::string& qtext, const std::string& ell, bool all_ell,
                 bool pretty) {
  PolyPtr p = parse_poly(ptext), q = parse_poly(qtext);
  char* c = nullptr;
  cg_poly *r = nullptr, *s = nullptr;
  check(cg_congruence_number(g_ctx, p.get(), q.get(), &c, &r, &s));
  PolyPtr rp(r, cg_poly_free), sp(s, cg_poly_free);
  std::printf("P=%s Q=%s\n", poly_text(p.get(), pretty).c_str(), poly_text(q.get(), pretty).c_str());
  std::printf("c=%s r=%s s=%s\n", take(c).c_str(), poly_text(rp.get(), pretty).c_str(),
              poly_text(sp.get(), pretty).c_str());
  std::vector<std::string> ells;
  if (all_ell) {
    char* list = nullptr;
    check(cg_congruence_primes(g_ctx, p.get(), q.get(), &list));
    std::string l = take(list);
    if (!l.empty()) ells = split(l, ',');
  } else {
    ells.push_back(ell);
  }
  for (const auto& e : ells) {
    cg_root_result res;
    check(cg_root_congruence(g_ctx, p.get(), q.get(), e.c_str(), &res));
    std::printf("ell=%s n=%ld lower=%ld upper=%ld %s case=%s method=%s\n", e.c_str(), res.n, res.lower, res.upper,
                res.exact ? "exact" : "inexact", res.case_tag, res.newton ? "np" : "cn");
  }
  return 0;
}

int run_charpoly(long level, const std::string& plist, long upto, const std::string& cls, long level_cap) {
  if (level_cap > 0) check(cg_context_set_level_cap(g_ctx, level_cap));
  std::vector<long> primes;
  if (!plist.empty()) {
    for (const auto& t : split(plist, ',')) primes.push_back(parse_long(t, "prime"));
  } else {
    long b = upto;
    if (b <= 0) {
      char* bound = nullptr;
      check(cg_sturm_bound(g_ctx, level, 2, &bound, nullptr, nullptr));
      auto parts = split(take(bound), '/');
      b = std::max<long>(13, parse_long(parts[0], "bound") / parse_long(parts[1], "bound"));
    }
    primes = primes_upto(b);
  }
  cg_dataset* d = open_source("@" + std::to_string(level));
  char* out = nullptr;
  check(cg_dataset_export(g_ctx, d, cls.empty() ? nullptr : cls.c_str(), primes.data(), primes.size(), &out));
  std::fputs(take(out).c_str(), stdout);
  return 0;
}

int run_congforms(const std::string& fspec, const std::string& gspec, bool skip, bool irred, bool bad_primes,
                  long cutoff, const std::string& store) {
  auto [df, fid] = open_form(fspec);
  auto [dg, gid] = open_form(gspec);
  cg_compare_options o;
  cg_compare_options_init(&o);
  o.skip_t_ell = skip;
  o.assert_irreducible = irred;
  o.include_p_dividing_levels = bad_primes;
  o.prime_cutoff = cutoff;
  cg_record* rec = nullptr;
  check(cg_compare(g_ctx, df, fid.c_str(), dg, gid.c_str(), &o, &rec));
  std::unique_ptr<cg_record, decltype(&cg_record_free)> guard(rec, cg_record_free);
  char* text = nullptr;
  check(cg_record_serialize(g_ctx, rec, &text));
  std::fputs(take(text).c_str(), stdout);
  if (!store.empty()) {
    int appended = 0;
    check(cg_store_append(g_ctx, store.c_str(), rec, &appended));
    std::printf("#store=%s\n", appended ? "appended" : "duplicate");
  }
  return 0;
}

int run_eisenstein(long level, const std::string& fspec, const std::string& espec, long cutoff) {
  std::vector<std::pair<cg_dataset*, std::string>> forms;
  if (!fspec.empty()) {
    forms.push_back(open_form(fspec));
  } else {
    if (level < 1) fail(CG_ERR_PRECONDITION, "give --level or --f");
    cg_dataset* d = open_source("@" + std::to_string(level));
    for (std::size_t i = 0; i < cg_dataset_size(d); ++i) forms.emplace_back(d, cg_dataset_id(d, i));
  }
  cg_dataset* ed = nullptr;
  std::string eid;
  if (!espec.empty()) std::tie(ed, eid) = open_form(espec);
  for (const auto& [d, id] : forms) {
    cg_eisenstein* e = nullptr;
    check(cg_eisenstein_scan(g_ctx, d, id.c_str(), ed, ed ? eid.c_str() : nullptr, cutoff, &e));
    std::unique_ptr<cg_eisenstein, decltype(&cg_eisenstein_free)> guard(e, cg_eisenstein_free);
    char *cut = nullptr, *num = nullptr;
    int insufficient = 0;
    check(cg_eisenstein_summary(g_ctx, e, &cut, &num, &insufficient));
    std::printf("class=%s cutoff=%s numerator=%s insufficient=%d\n", id.c_str(), take(cut).c_str(),
                take(num).c_str(), insufficient);
    for (std::size_t i = 0; i < cg_eisenstein_count(e); ++i) {
      char* ell = nullptr;
      long ex = 0, vn = 0;
      check(cg_eisenstein_entry(g_ctx, e, i, &ell, &ex, &vn));
      std::printf("ell=%s exponent=%ld v_numerator=%ld\n", take(ell).c_str(), ex, vn);
    }
  }
  return 0;
}

int run_levelraise(const std::string& fspec, long p, const std::string& ell) {
  auto [d, id] = open_form(fspec);
  cg_level_raising lr;
  char *cm = nullptr, *cp = nullptr;
  check(cg_level_raising_check(g_ctx, d, id.c_str(), p, ell.c_str(), &lr, &cm, &cp));
  std::string cms = take(cm), cps = take(cp);
  std::printf("e-=%ld (c=%s), e+=%ld (c=%s)\n", lr.e_minus, cms.c_str(), lr.e_plus, cps.c_str());
  std::printf("square e=%ld\n", lr.e_square);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime-power congruences between integer polynomials and newforms"};
  app.require_subcommand(1);
  long factor_cap = 0;
  unsigned threads = 1;
  app.add_option("--factor-cap", factor_cap, "Degree cap for factorization (also CONGRUON_FACTOR_CAP)");
  app.add_option("--threads", threads, "Worker threads for per-prime work");

  std::string ptext, qtext, ell;
  bool all_ell = false, pretty = false;
  auto* congpoly = app.add_subcommand("congpoly", "Congruence number and root congruence exponents of P and Q");
  congpoly->add_option("P", ptext, "Ascending coefficients, e.g. 12,1")->required();
  congpoly->add_option("Q", qtext, "Ascending coefficients")->required();
  auto* ell_opt = congpoly->add_option("--ell", ell, "Prime ell");
  auto* all_opt = congpoly->add_flag("--all-ell", all_ell, "Every prime dividing c(P, Q)");
  ell_opt->excludes(all_opt);
  congpoly->add_flag("--pretty", pretty, "Descending notation");

  long level = 0, upto = 0, level_cap = 0;
  std::string plist, cls;
  auto* charpoly = app.add_subcommand("charpoly", "Hecke charpolys of newform classes (FORM/CP lines)");
  charpoly->add_option("--level", level, "Level N")->required();
  auto* p_opt = charpoly->add_option("--p", plist, "Comma-separated primes");
  auto* upto_opt = charpoly->add_option("--upto", upto, "All primes up to this bound");
  p_opt->excludes(upto_opt);
  charpoly->add_option("--class", cls, "Only this class id");
  charpoly->add_option("--level-cap", level_cap, "Largest level the engine accepts");

  std::string fspec, gspec, store;
  bool skip = false, irred = false, bad_primes = false;
  long cutoff = 0;
  auto* congforms = app.add_subcommand("congforms", "Compare two newform classes; prints RESULT/DETAIL lines");
  congforms->add_option("--f", fspec, "file#id or @level#id")->required();
  congforms->add_option("--g", gspec, "file#id or @level#id")->required();
  congforms->add_flag("--skip-Tl", skip, "Leave out T_ell for the ell-exponent");
  congforms->add_flag("--assert-irred", irred, "Assert residual irreducibility (enables the old-space step)");
  congforms->add_flag("--include-bad-primes", bad_primes, "Also use primes dividing a level");
  congforms->add_option("--cutoff", cutoff, "Prime cutoff replacing the Sturm bound");
  congforms->add_option("--store", store, "Append the record to this results store");

  long elevel = 0, ecutoff = 0;
  std::string efspec, espec;
  auto* eis = app.add_subcommand("eisenstein", "Congruences with the Eisenstein series");
  eis->add_option("--level", elevel, "Prime level (engine classes)");
  eis->add_option("--f", efspec, "A single class, file#id or @level#id");
  eis->add_option("--eis", espec, "Ingested Eisenstein charpolys, file#id");
  eis->add_option("--cutoff", ecutoff, "Prime cutoff (default k b / 12)");

  std::string lfspec, lell;
  long lp = 0;
  auto* lraise = app.add_subcommand("levelraise", "Level raising check at p against X -+ (p + 1)");
  lraise->add_option("--f", lfspec, "file#id or @level#id")->required();
  lraise->add_option("--p", lp, "Prime not dividing the level")->required();
  lraise->add_option("--ell", lell, "Prime ell")->required();

  std::string cstore;
  auto* compact = app.add_subcommand("compact", "Deduplicate and rewrite a results store");
  compact->add_option("--store", cstore, "Results store")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return CG_ERR_PARSE;
  }

  g_ctx = cg_context_new();
  if (!g_ctx) {
    std::fprintf(stderr, "error: cannot create context\n");
    return CG_ERR_INTERNAL;
  }
  int rc = 0;
  try {
    if (factor_cap > 0) check(cg_context_set_factor_cap(g_ctx, factor_cap));
    check(cg_context_set_threads(g_ctx, threads));
    if (congpoly->parsed()) {
      if (!all_ell && ell.empty()) fail(CG_ERR_PARSE, "congpoly needs --ell or --all-ell");
      rc = run_congpoly(ptext, qtext, ell, all_ell, pretty);
    } else if (charpoly->parsed()) {
      rc = run_charpoly(level, plist, upto, cls, level_cap);
    } else if (congforms->parsed()) {
      rc = run_congforms(fspec, gspec, skip, irred, bad_primes, cutoff, store);
    } else if (eis->parsed()) {
      rc = run_eisenstein(elevel, efspec, espec, ecutoff);
    } else if (lraise->parsed()) {
      rc = run_levelraise(lfspec, lp, lell);
    } else if (compact->parsed()) {
      std::size_t kept = 0;
      check(cg_store_compact(g_ctx, cstore.c_str(), &kept));
      std::printf("kept=%zu\n", kept);
    }
  } catch (const Failure& f) {
    std::fflush(stdout);
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    rc = static_cast<int>(f.status);
  }
  g_sources.clear();
  cg_context_free(g_ctx);
  return rc;
}
