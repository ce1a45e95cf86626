#include "kbgq/kbgq.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "assemble.hpp"
#include "error.hpp"
#include "selfcheck.hpp"
#include "specio.hpp"

struct kbgq_spec {
  kbgq::SpecFile file;
};

struct kbgq_result {
  kbgq::KRationalResult result;
  kbgq::Json document;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_path;

kbgq_status status_of(kbgq::ErrorKind k) {
  switch (k) {
    case kbgq::ErrorKind::validation: return KBGQ_ERR_VALIDATION;
    case kbgq::ErrorKind::parse: return KBGQ_ERR_PARSE;
    case kbgq::ErrorKind::resource: return KBGQ_ERR_RESOURCE;
    case kbgq::ErrorKind::membership: return KBGQ_ERR_MEMBERSHIP;
    case kbgq::ErrorKind::internal_consistency: return KBGQ_ERR_INTERNAL;
  }
  return KBGQ_ERR_INTERNAL;
}

kbgq_status fail(kbgq_status s, const std::string& msg, const std::string& path = "") {
  last_error = msg;
  last_path = path;
  return s;
}

template <class F>
kbgq_status guard(F&& f) {
  last_error.clear();
  last_path.clear();
  try {
    return f();
  } catch (const kbgq::ParseError& e) {
    return fail(KBGQ_ERR_PARSE, e.what(), e.path());
  } catch (const kbgq::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KBGQ_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(KBGQ_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* kbgq_version(void) { return "1.0.0"; }

const char* kbgq_status_name(kbgq_status s) {
  switch (s) {
    case KBGQ_OK: return "ok";
    case KBGQ_ERR_VALIDATION: return "validation";
    case KBGQ_ERR_PARSE: return "parse";
    case KBGQ_ERR_RESOURCE: return "resource";
    case KBGQ_ERR_MEMBERSHIP: return "membership";
    case KBGQ_ERR_INTERNAL: return "internal_consistency";
    case KBGQ_ERR_ARGUMENT: return "argument";
  }
  return "unknown";
}

const char* kbgq_last_error(void) { return last_error.c_str(); }
const char* kbgq_last_error_path(void) { return last_path.c_str(); }

kbgq_status kbgq_spec_parse(const char* json, size_t length, uint64_t enumeration_cap, kbgq_spec** out) {
  if (!json || !out) return fail(KBGQ_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    auto spec = std::make_unique<kbgq_spec>();
    spec->file = kbgq::parse_spec(std::string(json, length),
                                  enumeration_cap ? enumeration_cap : kbgq::kDefaultEnumerationCap);
    *out = spec.release();
    return KBGQ_OK;
  });
}

void kbgq_spec_free(kbgq_spec* spec) { delete spec; }

const char* kbgq_spec_family(const kbgq_spec* spec) { return spec ? kbgq::family_name(spec->file.spec) : nullptr; }

kbgq_status kbgq_compute(const kbgq_spec* spec, kbgq_result** out) {
  if (!spec || !out) return fail(KBGQ_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    auto r = std::make_unique<kbgq_result>();
    r->result = kbgq::k_rational(spec->file.spec);
    r->document = kbgq::compute_document(spec->file);
    *out = r.release();
    return KBGQ_OK;
  });
}

void kbgq_result_free(kbgq_result* result) { delete result; }

kbgq_status kbgq_result_json(const kbgq_result* result, char** out) {
  if (!result || !out) return fail(KBGQ_ERR_ARGUMENT, "null argument");
  return guard([&] {
    *out = copy_string(kbgq::dump(result->document));
    return KBGQ_OK;
  });
}

kbgq_status kbgq_result_rational_rank(const kbgq_result* result, int64_t n, uint64_t* out) {
  if (!result || !out) return fail(KBGQ_ERR_ARGUMENT, "null argument");
  *out = result->result.k(static_cast<long>(n)).rational_rank;
  return KBGQ_OK;
}

kbgq_status kbgq_result_padic_rank(const kbgq_result* result, int64_t n, uint64_t p, uint64_t* out) {
  if (!result || !out) return fail(KBGQ_ERR_ARGUMENT, "null argument");
  const auto& m = result->result.k(static_cast<long>(n)).p_adic;
  auto it = m.find(p);
  *out = it == m.end() ? 0 : it->second;
  return KBGQ_OK;
}

kbgq_status kbgq_result_has_torsion(const kbgq_result* result, int* out) {
  if (!result || !out) return fail(KBGQ_ERR_ARGUMENT, "null argument");
  *out = kbgq::torsion_criterion(result->result) ? 1 : 0;
  return KBGQ_OK;
}

size_t kbgq_result_note_count(const kbgq_result* result) { return result ? result->result.notes.size() : 0; }

const char* kbgq_result_note_code(const kbgq_result* result, size_t i) {
  if (!result || i >= result->result.notes.size()) return nullptr;
  return result->result.notes[i].code.c_str();
}

kbgq_status kbgq_chartab_json(const kbgq_spec* spec, char** out) {
  if (!spec || !out) return fail(KBGQ_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    const auto* g = std::get_if<kbgq::PermGroup>(&spec->file.spec);
    if (!g) return fail(KBGQ_ERR_VALIDATION, "character tables need a finite_perm spec", "/spec/type");
    *out = copy_string(kbgq::dump(kbgq::to_json(kbgq::character_table(*g))));
    return KBGQ_OK;
  });
}

kbgq_status kbgq_selfcheck(const kbgq_selfcheck_options* options, char** report_json, int* outcome) {
  if (!report_json || !outcome) return fail(KBGQ_ERR_ARGUMENT, "null argument");
  *report_json = nullptr;
  return guard([&] {
    kbgq::SelfcheckOptions opt;
    if (options) {
      if (options->max_order) opt.max_order = options->max_order;
      if (options->depth) opt.depth = options->depth;
      if (options->seed) opt.seed = options->seed;
      opt.threads = options->threads;
      opt.corrupt_constant = options->corrupt_constant != 0;
    }
    auto res = kbgq::selfcheck(opt);
    kbgq::Json doc;
    std::size_t passed = 0;
    kbgq::Json checks = kbgq::Json::array();
    for (const auto& r : res.checks) {
      auto j = kbgq::to_json(r);
      if (kbgq::is_inconclusive(r)) j["status"] = "inconclusive";
      passed += r.pass();
      checks.push_back(std::move(j));
    }
    const char* names[] = {"pass", "fail", "inconclusive"};
    doc["outcome"] = names[static_cast<int>(res.outcome)];
    doc["options"] = {{"max_order", opt.max_order}, {"depth", opt.depth}, {"seed", opt.seed}};
    doc["passed"] = passed;
    doc["total"] = res.checks.size();
    doc["checks"] = std::move(checks);
    *report_json = copy_string(kbgq::dump(doc));
    *outcome = res.outcome == kbgq::SelfcheckOutcome::pass   ? KBGQ_OUTCOME_PASS
               : res.outcome == kbgq::SelfcheckOutcome::fail ? KBGQ_OUTCOME_FAIL
                                                             : KBGQ_OUTCOME_INCONCLUSIVE;
    return KBGQ_OK;
  });
}

kbgq_status kbgq_padic_root_check(uint64_t l, uint64_t p, uint32_t precision, int* exists) {
  if (!exists) return fail(KBGQ_ERR_ARGUMENT, "null argument");
  return guard([&] {
    auto r = kbgq::padic_root_check(l, p, precision);
    if (!r.decided) return fail(KBGQ_ERR_RESOURCE, "only repeated roots found; raise the precision");
    *exists = r.exists ? 1 : 0;
    return KBGQ_OK;
  });
}

void kbgq_string_free(char* s) { std::free(s); }

}  // extern "C"
