#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstring>
#include <string>

#include "congruon/congruon.h"

namespace {

struct Ctx {
  cg_context* c = cg_context_new();
  ~Ctx() { cg_context_free(c); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  cg_string_free(s);
  return out;
}

cg_poly* poly(cg_context* c, const char* text) {
  cg_poly* p = nullptr;
  REQUIRE(cg_poly_parse(c, text, &p) == CG_OK);
  return p;
}

}  // namespace

TEST_CASE("polynomial entry points") {
  Ctx ctx;
  cg_poly* p = poly(ctx.c, "12,1");
  cg_poly* q = poly(ctx.c, "-60,1");
  char* c = nullptr;
  cg_poly *r = nullptr, *s = nullptr;
  REQUIRE(cg_congruence_number(ctx.c, p, q, &c, &r, &s) == CG_OK);
  CHECK(take(c) == "72");
  char* rs = nullptr;
  REQUIRE(cg_poly_to_string(ctx.c, r, 0, &rs) == CG_OK);
  CHECK(take(rs) == "1");
  REQUIRE(cg_poly_to_string(ctx.c, s, 0, &rs) == CG_OK);
  CHECK(take(rs) == "-1");
  REQUIRE(cg_poly_to_string(ctx.c, q, 1, &rs) == CG_OK);
  CHECK(take(rs) == "X - 60");
  char* primes = nullptr;
  REQUIRE(cg_congruence_primes(ctx.c, p, q, &primes) == CG_OK);
  CHECK(take(primes) == "2,3");
  cg_root_result res;
  REQUIRE(cg_root_congruence(ctx.c, p, q, "3", &res) == CG_OK);
  CHECK(res.n == 2);
  CHECK(res.exact == 1);
  CHECK(std::string(res.case_tag) == "c(i)");
  CHECK(cg_root_congruence(ctx.c, p, q, "4", &res) == CG_ERR_PRECONDITION);
  CHECK(std::string(cg_last_error(ctx.c)).find("not prime") != std::string::npos);
  CHECK(cg_poly_degree(p) == 1);
  cg_poly_free(p);
  cg_poly_free(q);
  cg_poly_free(r);
  cg_poly_free(s);
}

TEST_CASE("status codes") {
  Ctx ctx;
  cg_poly* p = nullptr;
  CHECK(cg_poly_parse(ctx.c, "1,x", &p) == CG_ERR_PARSE);
  CHECK(p == nullptr);
  cg_poly* a = poly(ctx.c, "1,0,1");
  cg_poly* b = poly(ctx.c, "1,0,1");
  char* c = nullptr;
  CHECK(cg_congruence_number(ctx.c, a, b, &c, nullptr, nullptr) == CG_ERR_NOT_COPRIME);
  cg_level* lvl = nullptr;
  CHECK(cg_level_build(ctx.c, 301, &lvl) == CG_ERR_CAP);
  CHECK(cg_context_set_level_cap(ctx.c, 0) == CG_ERR_PRECONDITION);
  CHECK(cg_poly_parse(ctx.c, nullptr, &p) == CG_ERR_PRECONDITION);
  CHECK(cg_poly_parse(nullptr, "1", &p) == CG_ERR_PRECONDITION);
  cg_dataset* d = nullptr;
  CHECK(cg_dataset_read_file(ctx.c, "/nonexistent/x.txt", &d) == CG_ERR_IO);
  cg_poly_free(a);
  cg_poly_free(b);
}

TEST_CASE("levels, datasets and comparisons") {
  Ctx ctx;
  cg_level* lvl = nullptr;
  REQUIRE(cg_level_build(ctx.c, 71, &lvl) == CG_OK);
  size_t full = 0, cusp = 0, nw = 0;
  REQUIRE(cg_level_dimensions(ctx.c, lvl, &full, &cusp, &nw) == CG_OK);
  CHECK(full == 13);
  CHECK(cusp == 12);
  CHECK(nw == 12);
  cg_dataset* d = nullptr;
  REQUIRE(cg_level_classes(ctx.c, lvl, &d) == CG_OK);
  cg_level_free(lvl);
  REQUIRE(cg_dataset_size(d) == 2);
  CHECK(std::string(cg_dataset_id(d, 0)) == "71.a");
  CHECK(cg_dataset_id(d, 2) == nullptr);

  long primes[] = {2, 3, 5, 7, 11};
  char* text = nullptr;
  REQUIRE(cg_dataset_export(ctx.c, d, nullptr, primes, 5, &text) == CG_OK);
  std::string exported = take(text);
  CHECK(exported.rfind("FORM id=71.a level=71 weight=2 degree=3\nCP id=71.a p=2 coeffs=-3,-4,1,1\n", 0) == 0);
  cg_dataset* parsed = nullptr;
  REQUIRE(cg_dataset_parse(ctx.c, exported.c_str(), &parsed) == CG_OK);
  REQUIRE(cg_dataset_serialize(ctx.c, parsed, &text) == CG_OK);
  CHECK(take(text) == exported);

  cg_compare_options o;
  cg_compare_options_init(&o);
  o.skip_t_ell = 1;
  cg_record* rec = nullptr;
  REQUIRE(cg_compare(ctx.c, parsed, "71.a", parsed, "71.b", &o, &rec) == CG_OK);
  char *lm = nullptr, *lp = nullptr;
  REQUIRE(cg_record_bounds(ctx.c, rec, &lm, &lp) == CG_OK);
  CHECK(take(lm) == "18");
  CHECK(take(lp) == "18");
  REQUIRE(cg_record_serialize(ctx.c, rec, &text) == CG_OK);
  CHECK(take(text).rfind("RESULT f=71.a g=71.b Lminus=18 Lplus=18 sturm=11/1 hyp314=1 skipTl=1\n", 0) == 0);

  std::string store = "/tmp/congruon_capi_" + std::to_string(::getpid()) + ".txt";
  int appended = -1;
  REQUIRE(cg_store_append(ctx.c, store.c_str(), rec, &appended) == CG_OK);
  CHECK(appended == 1);
  REQUIRE(cg_store_append(ctx.c, store.c_str(), rec, &appended) == CG_OK);
  CHECK(appended == 0);
  size_t kept = 0;
  REQUIRE(cg_store_compact(ctx.c, store.c_str(), &kept) == CG_OK);
  CHECK(kept == 1);
  std::remove(store.c_str());
  std::remove((store + ".lock").c_str());
  cg_record_free(rec);

  CHECK(cg_compare(ctx.c, parsed, "71.a", parsed, "71.a", &o, &rec) == CG_ERR_NOT_COPRIME);
  CHECK(cg_compare(ctx.c, parsed, "71.a", parsed, "nope", &o, &rec) == CG_ERR_PRECONDITION);
  cg_poly* cp = nullptr;
  CHECK(cg_class_charpoly(ctx.c, parsed, "71.a", 13, &cp) == CG_ERR_PRECONDITION);
  REQUIRE(cg_class_charpoly(ctx.c, d, "71.a", 13, &cp) == CG_OK);
  CHECK(cg_poly_degree(cp) == 3);
  cg_poly_free(cp);
  cg_dataset_free(parsed);
  cg_dataset_free(d);
}

TEST_CASE("Sturm, Eisenstein and level raising") {
  Ctx ctx;
  char *b = nullptr, *idx = nullptr;
  int insufficient = -1;
  REQUIRE(cg_sturm_bound(ctx.c, 11, 2, &b, &idx, &insufficient) == CG_OK);
  CHECK(take(b) == "1/1");
  CHECK(take(idx) == "12");
  CHECK(insufficient == 1);

  cg_level* lvl = nullptr;
  cg_dataset* d11 = nullptr;
  REQUIRE(cg_level_build(ctx.c, 11, &lvl) == CG_OK);
  REQUIRE(cg_level_classes(ctx.c, lvl, &d11) == CG_OK);
  cg_level_free(lvl);
  cg_eisenstein* e = nullptr;
  REQUIRE(cg_eisenstein_scan(ctx.c, d11, "11.a", nullptr, nullptr, 0, &e) == CG_OK);
  REQUIRE(cg_eisenstein_count(e) == 1);
  char* ell = nullptr;
  long ex = 0, vn = 0;
  REQUIRE(cg_eisenstein_entry(ctx.c, e, 0, &ell, &ex, &vn) == CG_OK);
  CHECK(take(ell) == "5");
  CHECK(ex >= 1);
  CHECK(vn == 1);
  CHECK(cg_eisenstein_entry(ctx.c, e, 1, &ell, &ex, &vn) == CG_ERR_PRECONDITION);
  cg_eisenstein_free(e);
  cg_dataset_free(d11);

  cg_dataset* d17 = nullptr;
  REQUIRE(cg_level_build(ctx.c, 17, &lvl) == CG_OK);
  REQUIRE(cg_level_classes(ctx.c, lvl, &d17) == CG_OK);
  cg_level_free(lvl);
  cg_level_raising lr;
  char *cm = nullptr, *cp = nullptr;
  REQUIRE(cg_level_raising_check(ctx.c, d17, "17.a", 59, "3", &lr, &cm, &cp) == CG_OK);
  CHECK(lr.e_minus == 2);
  CHECK(lr.e_plus == 1);
  CHECK(take(cm) == "72");
  CHECK(take(cp) == "48");
  CHECK(cg_level_raising_check(ctx.c, d17, "17.a", 17, "3", &lr, nullptr, nullptr) == CG_ERR_PRECONDITION);
  cg_dataset_free(d17);
}
