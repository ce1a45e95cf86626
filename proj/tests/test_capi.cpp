// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "kbgq/kbgq.h"

namespace {

const char* kS3 = R"({"version":1,"spec":{"type":"finite_perm","degree":3,"generators":[[1,0,2],[1,2,0]]}})";
const char* kFuchsian = R"({"version":1,"spec":{"type":"fuchsian","genus":2,"periods":[3,4]}})";

kbgq_spec* parse(const char* text) {
  kbgq_spec* s = nullptr;
  REQUIRE(kbgq_spec_parse(text, std::strlen(text), 0, &s) == KBGQ_OK);
  return s;
}

nlohmann::json result_json(const kbgq_result* r) {
  char* out = nullptr;
  REQUIRE(kbgq_result_json(r, &out) == KBGQ_OK);
  auto j = nlohmann::json::parse(out);
  kbgq_string_free(out);
  return j;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(kbgq_version()) > 0);
  CHECK(std::string(kbgq_status_name(KBGQ_ERR_PARSE)) == "parse");
  CHECK(std::string(kbgq_status_name(KBGQ_OK)) == "ok");
}

TEST_CASE("compute through the C API") {
  auto* s = parse(kS3);
  CHECK(std::string(kbgq_spec_family(s)) == "finite_perm");
  kbgq_result* r = nullptr;
  REQUIRE(kbgq_compute(s, &r) == KBGQ_OK);
  std::uint64_t v = 0;
  CHECK(kbgq_result_rational_rank(r, 0, &v) == KBGQ_OK);
  CHECK(v == 1);
  CHECK(kbgq_result_rational_rank(r, 1, &v) == KBGQ_OK);
  CHECK(v == 0);
  CHECK(kbgq_result_padic_rank(r, 0, 2, &v) == KBGQ_OK);
  CHECK(v == 1);
  CHECK(kbgq_result_padic_rank(r, -4, 3, &v) == KBGQ_OK);
  CHECK(v == 1);
  CHECK(kbgq_result_padic_rank(r, 0, 5, &v) == KBGQ_OK);
  CHECK(v == 0);
  int t = -1;
  CHECK(kbgq_result_has_torsion(r, &t) == KBGQ_OK);
  CHECK(t == 1);
  auto j = result_json(r);
  CHECK(j["k0"]["p_adic"]["3"] == 1);
  CHECK(kbgq_result_note_count(r) == 0);
  CHECK(kbgq_result_note_code(r, 0) == nullptr);
  kbgq_result_free(r);
  kbgq_spec_free(s);
}

TEST_CASE("parity is the only thing that matters") {
  auto* s = parse(kFuchsian);
  kbgq_result* r = nullptr;
  REQUIRE(kbgq_compute(s, &r) == KBGQ_OK);
  for (std::int64_t n = -2; n <= 3; ++n) {
    std::uint64_t a = 0, b = 0;
    kbgq_result_rational_rank(r, n, &a);
    kbgq_result_rational_rank(r, n + 2, &b);
    CHECK(a == b);
  }
  std::uint64_t k1 = 0;
  kbgq_result_rational_rank(r, 1, &k1);
  CHECK(k1 == 4);
  kbgq_result_free(r);
  kbgq_spec_free(s);
}

TEST_CASE("errors carry a status, a message and a path") {
  kbgq_spec* s = nullptr;
  const char* bad = R"({"version":1,"spec":{"type":"direct","betti":[1],"centralizers":{}}})";
  CHECK(kbgq_spec_parse(bad, std::strlen(bad), 0, &s) == KBGQ_ERR_PARSE);
  CHECK(s == nullptr);
  CHECK(std::string(kbgq_last_error_path()) == "/spec/notes");
  CHECK(std::strlen(kbgq_last_error()) > 0);

  const char* nonhyp = R"({"version":1,"spec":{"type":"fuchsian","genus":1,"periods":[]}})";
  CHECK(kbgq_spec_parse(nonhyp, std::strlen(nonhyp), 0, &s) == KBGQ_ERR_VALIDATION);

  const char* junk = "{";
  CHECK(kbgq_spec_parse(junk, 1, 0, &s) == KBGQ_ERR_PARSE);

  CHECK(kbgq_spec_parse(nullptr, 0, 0, &s) == KBGQ_ERR_ARGUMENT);
  CHECK(kbgq_compute(nullptr, nullptr) == KBGQ_ERR_ARGUMENT);

  const char* s5 = R"({"version":1,"spec":{"type":"finite_perm","degree":5,"generators":[[1,0,2,3,4],[1,2,3,4,0]]}})";
  REQUIRE(kbgq_spec_parse(s5, std::strlen(s5), 50, &s) == KBGQ_OK);
  kbgq_result* r = nullptr;
  CHECK(kbgq_compute(s, &r) == KBGQ_ERR_RESOURCE);
  kbgq_spec_free(s);
}

TEST_CASE("notes") {
  auto* s = parse(R"({"version":1,"spec":{"type":"crystallographic","p":3,"sigma":[[0,-1],[1,-1]]}})");
  kbgq_result* r = nullptr;
  REQUIRE(kbgq_compute(s, &r) == KBGQ_OK);
  REQUIRE(kbgq_result_note_count(r) >= 1);
  CHECK(std::string(kbgq_result_note_code(r, 0)) == "rational_part_discrepancy");
  std::uint64_t v = 0;
  kbgq_result_padic_rank(r, 0, 3, &v);
  CHECK(v == 6);
  kbgq_result_free(r);
  kbgq_spec_free(s);
}

TEST_CASE("character table json") {
  auto* s = parse(kS3);
  char* out = nullptr;
  REQUIRE(kbgq_chartab_json(s, &out) == KBGQ_OK);
  auto j = nlohmann::json::parse(out);
  kbgq_string_free(out);
  CHECK(j.dump().find("classes") != std::string::npos);
  kbgq_spec_free(s);

  auto* f = parse(kFuchsian);
  CHECK(kbgq_chartab_json(f, &out) == KBGQ_ERR_VALIDATION);
  CHECK(std::string(kbgq_last_error_path()) == "/spec/type");
  kbgq_spec_free(f);
}

TEST_CASE("p-adic roots") {
  int e = -1;
  CHECK(kbgq_padic_root_check(3, 3, 2, &e) == KBGQ_OK);
  CHECK(e == 0);
  CHECK(kbgq_padic_root_check(4, 5, 2, &e) == KBGQ_OK);
  CHECK(e == 1);
  CHECK(kbgq_padic_root_check(4, 6, 2, &e) != KBGQ_OK);
}

TEST_CASE("selfcheck outcome and the corruption hook") {
  kbgq_selfcheck_options opt{};
  opt.max_order = 6;
  opt.depth = 4;
  char* json = nullptr;
  int outcome = -1;
  REQUIRE(kbgq_selfcheck(&opt, &json, &outcome) == KBGQ_OK);
  CHECK(outcome == KBGQ_OUTCOME_PASS);
  auto j = nlohmann::json::parse(json);
  kbgq_string_free(json);
  CHECK(j["passed"] == j["total"]);

  opt.corrupt_constant = 1;
  REQUIRE(kbgq_selfcheck(&opt, &json, &outcome) == KBGQ_OK);
  CHECK(outcome == KBGQ_OUTCOME_FAIL);
  auto bad = nlohmann::json::parse(json);
  kbgq_string_free(json);
  bool named = false;
  for (const auto& c : bad["checks"])
    if (c["status"] == "fail" && c["name"].get<std::string>().rfind("ring_constants", 0) == 0) named = true;
  CHECK(named);
}

TEST_CASE("error state is per thread") {
  kbgq_spec* s = nullptr;
  const char* junk = "{";
  kbgq_spec_parse(junk, 1, 0, &s);
  std::string other;
  std::thread th([&] { other = kbgq_last_error(); });
  th.join();
  CHECK(other.empty());
  CHECK(std::strlen(kbgq_last_error()) > 0);
}

TEST_CASE("concurrent computes agree") {
  auto* s = parse(kS3);
  std::vector<std::string> outs(4);
  std::vector<std::thread> ts;
  for (int i = 0; i < 4; ++i)
    ts.emplace_back([&, i] {
      kbgq_result* r = nullptr;
      if (kbgq_compute(s, &r) != KBGQ_OK) return;
      char* o = nullptr;
      kbgq_result_json(r, &o);
      outs[i] = o;
      kbgq_string_free(o);
      kbgq_result_free(r);
    });
  for (auto& t : ts) t.join();
  for (int i = 1; i < 4; ++i) CHECK(outs[i] == outs[0]);
  CHECK_FALSE(outs[0].empty());
  kbgq_spec_free(s);
}
