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
#include "congruon/congruon.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "congruon/congruence.hpp"
#include "congruon/error.hpp"
#include "congruon/hecke_io.hpp"
#include "congruon/modsym.hpp"
#include "congruon/padic.hpp"
#include "congruon/pipeline.hpp"

using namespace congruon;

struct cg_context {
  std::string error;
  FactorOptions factor;
  BuildOptions build;
  unsigned threads = 1;
};

struct cg_poly {
  IntPoly p;
};

struct cg_dataset {
  CharPolyDataset d;
};

struct cg_level {
  std::shared_ptr<const ModSymSpace> space;
  Subspace cuspidal, new_part;
  FactorOptions factor;
};

struct cg_record {
  ComparisonRecord r;
};

struct cg_eisenstein {
  EisensteinScan s;
};

namespace {

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
cg_status guarded(cg_context* ctx, F&& body) {
  if (!ctx) return CG_ERR_PRECONDITION;
  ctx->error.clear();
  try {
    body();
    return CG_OK;
  } catch (const Error& e) {
    ctx->error = e.what();
    return static_cast<cg_status>(static_cast<int>(e.code()));
  } catch (const std::invalid_argument& e) {
    ctx->error = e.what();
    return CG_ERR_PRECONDITION;
  } catch (const std::domain_error& e) {
    ctx->error = e.what();
    return CG_ERR_PRECONDITION;
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    return CG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return CG_ERR_INTERNAL;
  } catch (...) {
    ctx->error = "unknown error";
    return CG_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw PreconditionError(std::string(what) + " is null");
}

Integer parse_prime(const char* ell) {
  need(ell, "ell");
  std::string s(ell);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad prime '" + s + "'");
  Integer v(s);
  if (!is_prime(v)) throw PreconditionError("ell = " + s + " is not prime");
  return v;
}

NewformClass& lookup(cg_dataset* d, const char* id) {
  need(d, "dataset");
  need(id, "id");
  NewformClass* c = d->d.find(id);
  if (!c) throw PreconditionError(std::string("no class with id '") + id + "'");
  return *c;
}

}  // namespace

extern "C" {

const char* cg_version(void) { return "0.1.0"; }

void cg_string_free(char* s) { std::free(s); }

cg_context* cg_context_new(void) {
  auto* ctx = new (std::nothrow) cg_context;
  if (!ctx) return nullptr;
  if (const char* env = std::getenv("CONGRUON_FACTOR_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) ctx->factor.degree_cap = v;
  }
  return ctx;
}

void cg_context_free(cg_context* ctx) { delete ctx; }

const char* cg_last_error(const cg_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

cg_status cg_context_set_factor_cap(cg_context* ctx, long cap) {
  return guarded(ctx, [&] {
    if (cap < 1) throw PreconditionError("factor cap must be positive");
    ctx->factor.degree_cap = cap;
  });
}

cg_status cg_context_set_level_cap(cg_context* ctx, long cap) {
  return guarded(ctx, [&] {
    if (cap < 1) throw PreconditionError("level cap must be positive");
    ctx->build.level_cap = cap;
  });
}

cg_status cg_context_set_threads(cg_context* ctx, unsigned threads) {
  return guarded(ctx, [&] { ctx->threads = threads == 0 ? 1 : threads; });
}

cg_status cg_poly_parse(cg_context* ctx, const char* ascending, cg_poly** out) {
  return guarded(ctx, [&] {
    need(ascending, "polynomial text");
    need(out, "out");
    *out = new cg_poly{IntPoly::parse(ascending)};
  });
}

void cg_poly_free(cg_poly* p) { delete p; }

int cg_poly_degree(const cg_poly* p) { return p ? p->p.degree() : -1; }

cg_status cg_poly_to_string(cg_context* ctx, const cg_poly* p, int pretty, char** out) {
  return guarded(ctx, [&] {
    need(p, "polynomial");
    need(out, "out");
    *out = dup(pretty ? p->p.pretty() : p->p.to_string());
  });
}

cg_status cg_congruence_number(cg_context* ctx, const cg_poly* p, const cg_poly* q, char** c, cg_poly** r,
                               cg_poly** s) {
  return guarded(ctx, [&] {
    need(p, "P");
    need(q, "Q");
    CongruenceNumberResult res = congruence_number(p->p, q->p);
    if (c) *c = dup(res.c.get_str());
    if (r) *r = new cg_poly{res.r};
    if (s) *s = new cg_poly{res.s};
  });
}

cg_status cg_congruence_primes(cg_context* ctx, const cg_poly* p, const cg_poly* q, char** out) {
  return guarded(ctx, [&] {
    need(p, "P");
    need(q, "Q");
    need(out, "out");
    CongruenceNumberResult res = congruence_number(p->p, q->p);
    std::string s;
    if (res.c > 1)
      for (const auto& l : prime_divisors(res.c)) s += (s.empty() ? "" : ",") + l.get_str();
    *out = dup(s);
  });
}

cg_status cg_root_congruence(cg_context* ctx, const cg_poly* p, const cg_poly* q, const char* ell,
                             cg_root_result* out) {
  return guarded(ctx, [&] {
    need(p, "P");
    need(q, "Q");
    need(out, "out");
    Integer l = parse_prime(ell);
    RootCongruence rc = max_root_congruence(p->p, q->p, l, ctx->factor);
    out->n = rc.n;
    out->lower = rc.bounds.lower;
    out->upper = rc.bounds.upper;
    out->exact = rc.bounds.exact ? 1 : 0;
    out->newton = rc.method == Method::NewtonPolygon ? 1 : 0;
    std::string tag = to_string(rc.bounds.case_tag);
    std::snprintf(out->case_tag, sizeof out->case_tag, "%s", tag.c_str());
  });
}

cg_status cg_dataset_parse(cg_context* ctx, const char* text, cg_dataset** out) {
  return guarded(ctx, [&] {
    need(text, "text");
    need(out, "out");
    *out = new cg_dataset{parse_dataset(text)};
  });
}

cg_status cg_dataset_read_file(cg_context* ctx, const char* path, cg_dataset** out) {
  return guarded(ctx, [&] {
    need(path, "path");
    need(out, "out");
    *out = new cg_dataset{read_dataset_file(path)};
  });
}

void cg_dataset_free(cg_dataset* d) { delete d; }

size_t cg_dataset_size(const cg_dataset* d) { return d ? d->d.forms.size() : 0; }

const char* cg_dataset_id(const cg_dataset* d, size_t i) {
  if (!d || i >= d->d.forms.size()) return nullptr;
  return d->d.forms[i].id.c_str();
}

cg_status cg_dataset_serialize(cg_context* ctx, const cg_dataset* d, char** out) {
  return guarded(ctx, [&] {
    need(d, "dataset");
    need(out, "out");
    *out = dup(serialize_dataset(d->d));
  });
}

cg_status cg_dataset_export(cg_context* ctx, cg_dataset* d, const char* id, const long* primes, size_t nprimes,
                            char** out) {
  return guarded(ctx, [&] {
    need(d, "dataset");
    need(out, "out");
    if (nprimes) need(primes, "primes");
    std::vector<long> ps(primes, primes + nprimes);
    std::string text;
    if (id) {
      text = export_class(lookup(d, id), ps);
    } else {
      for (auto& c : d->d.forms) text += export_class(c, ps);
    }
    *out = dup(text);
  });
}

cg_status cg_class_charpoly(cg_context* ctx, cg_dataset* d, const char* id, long p, cg_poly** out) {
  return guarded(ctx, [&] {
    need(out, "out");
    *out = new cg_poly{class_charpoly(lookup(d, id), p)};
  });
}

cg_status cg_level_build(cg_context* ctx, long level, cg_level** out) {
  return guarded(ctx, [&] {
    need(out, "out");
    auto space = ModSymSpace::build(level, ctx->build);
    Subspace cusp = cuspidal_subspace(space);
    Subspace nw = cuspidal_new_subspace(space, ctx->build);
    *out = new cg_level{space, std::move(cusp), std::move(nw), ctx->factor};
  });
}

void cg_level_free(cg_level* l) { delete l; }

cg_status cg_level_dimensions(cg_context* ctx, const cg_level* l, size_t* full, size_t* cuspidal,
                              size_t* new_part) {
  return guarded(ctx, [&] {
    need(l, "level");
    if (full) *full = l->space->dimension();
    if (cuspidal) *cuspidal = l->cuspidal.dimension();
    if (new_part) *new_part = l->new_part.dimension();
  });
}

cg_status cg_level_classes(cg_context* ctx, const cg_level* l, cg_dataset** out) {
  return guarded(ctx, [&] {
    need(l, "level");
    need(out, "out");
    *out = new cg_dataset{CharPolyDataset{decompose_into_classes(l->new_part, l->factor)}};
  });
}

cg_status cg_sturm_bound(cg_context* ctx, long level, long weight, char** bound, char** index, int* insufficient) {
  return guarded(ctx, [&] {
    SturmBound s = sturm_bound(level, weight);
    if (bound) *bound = dup(s.bound.get_num().get_str() + "/" + s.bound.get_den().get_str());
    if (index) *index = dup(s.index.get_str());
    if (insufficient) *insufficient = s.insufficient_primes() ? 1 : 0;
  });
}

void cg_compare_options_init(cg_compare_options* o) {
  if (!o) return;
  o->skip_t_ell = 0;
  o->include_p_dividing_levels = 0;
  o->prime_cutoff = 0;
  o->assert_irreducible = 0;
}

cg_status cg_compare(cg_context* ctx, cg_dataset* df, const char* f_id, cg_dataset* dg, const char* g_id,
                     const cg_compare_options* opts, cg_record** out) {
  return guarded(ctx, [&] {
    need(out, "out");
    ComparisonOptions o;
    if (opts) {
      o.skip_t_ell = opts->skip_t_ell != 0;
      o.include_p_dividing_levels = opts->include_p_dividing_levels != 0;
      if (opts->prime_cutoff < 0) throw PreconditionError("prime cutoff must be positive");
      if (opts->prime_cutoff > 0) o.prime_cutoff_override = opts->prime_cutoff;
      o.assert_irreducible = opts->assert_irreducible != 0;
    }
    o.factor = ctx->factor;
    o.threads = ctx->threads;
    NewformClass& f = lookup(df, f_id);
    NewformClass& g = lookup(dg, g_id);
    *out = new cg_record{compare_newforms(f, g, o)};
  });
}

void cg_record_free(cg_record* r) { delete r; }

cg_status cg_record_bounds(cg_context* ctx, const cg_record* r, char** l_minus, char** l_plus) {
  return guarded(ctx, [&] {
    need(r, "record");
    if (l_minus) *l_minus = dup(r->r.l_minus.get_str());
    if (l_plus) *l_plus = dup(r->r.l_plus.get_str());
  });
}

cg_status cg_record_serialize(cg_context* ctx, const cg_record* r, char** out) {
  return guarded(ctx, [&] {
    need(r, "record");
    need(out, "out");
    *out = dup(serialize_record(r->r));
  });
}

cg_status cg_store_append(cg_context* ctx, const char* path, const cg_record* r, int* appended) {
  return guarded(ctx, [&] {
    need(path, "path");
    need(r, "record");
    bool ok = append_result(path, r->r);
    if (appended) *appended = ok ? 1 : 0;
  });
}

cg_status cg_store_compact(cg_context* ctx, const char* path, size_t* kept) {
  return guarded(ctx, [&] {
    need(path, "path");
    std::size_t k = compact_results(path);
    if (kept) *kept = k;
  });
}

cg_status cg_eisenstein_scan(cg_context* ctx, cg_dataset* d, const char* id, cg_dataset* eis_data, const char* eis_id,
                             long cutoff, cg_eisenstein** out) {
  return guarded(ctx, [&] {
    need(out, "out");
    NewformClass& f = lookup(d, id);
    NewformClass* e = nullptr;
    if (eis_data) e = &lookup(eis_data, eis_id);
    if (cutoff < 0) throw PreconditionError("cutoff must be positive");
    std::optional<long> c;
    if (cutoff > 0) c = cutoff;
    *out = new cg_eisenstein{eisenstein_scan(f, e, c, ctx->factor)};
  });
}

void cg_eisenstein_free(cg_eisenstein* e) { delete e; }

cg_status cg_eisenstein_summary(cg_context* ctx, const cg_eisenstein* e, char** cutoff, char** numerator,
                                int* insufficient) {
  return guarded(ctx, [&] {
    need(e, "scan");
    if (cutoff) *cutoff = dup(e->s.cutoff.get_num().get_str() + "/" + e->s.cutoff.get_den().get_str());
    if (numerator) *numerator = dup(e->s.numerator.get_str());
    if (insufficient) *insufficient = e->s.insufficient_primes ? 1 : 0;
  });
}

size_t cg_eisenstein_count(const cg_eisenstein* e) { return e ? e->s.entries.size() : 0; }

cg_status cg_eisenstein_entry(cg_context* ctx, const cg_eisenstein* e, size_t i, char** ell, long* exponent,
                              long* v_numerator) {
  return guarded(ctx, [&] {
    need(e, "scan");
    if (i >= e->s.entries.size()) throw PreconditionError("entry index out of range");
    const auto& en = e->s.entries[i];
    if (ell) *ell = dup(en.ell.get_str());
    if (exponent) *exponent = en.exponent;
    if (v_numerator) *v_numerator = en.v_numerator;
  });
}

cg_status cg_level_raising_check(cg_context* ctx, cg_dataset* d, const char* id, long p, const char* ell,
                                 cg_level_raising* out, char** c_minus, char** c_plus) {
  return guarded(ctx, [&] {
    need(out, "out");
    Integer l = parse_prime(ell);
    LevelRaising lr = level_raising_check(lookup(d, id), p, l, ctx->factor);
    out->e_minus = lr.e_minus;
    out->e_plus = lr.e_plus;
    out->e_square = lr.e_square;
    if (c_minus) *c_minus = dup(lr.c_minus.get_str());
    if (c_plus) *c_plus = dup(lr.c_plus.get_str());
  });
}

}  // extern "C"
