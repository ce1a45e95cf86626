#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kbgq/kbgq.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;

int report_error(kbgq_status s, const std::string& message, const std::string& path) {
  nlohmann::ordered_json j;
  j["error"] = {{"kind", kbgq_status_name(s)}, {"message", message}};
  if (!path.empty()) j["error"]["path"] = path;
  std::cerr << j.dump(2) << "\n";
  return kExitError;
}

int report_last(kbgq_status s) { return report_error(s, kbgq_last_error(), kbgq_last_error_path()); }

bool read_file(const std::string& name, std::string& out) {
  std::ifstream in(name, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool enumeration_cap(std::uint64_t& cap) {
  cap = 0;
  const char* env = std::getenv("KBGQ_ENUM_CAP");
  if (!env || !*env) return true;
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (errno || *end || v == 0) return false;
  cap = v;
  return true;
}

// Parses the file into a spec; on failure prints the diagnostic and returns nullptr.
kbgq_spec* load_spec(const std::string& file, int& exit_code) {
  std::string text;
  if (!read_file(file, text)) {
    exit_code = report_error(KBGQ_ERR_ARGUMENT, "cannot read " + file, "");
    return nullptr;
  }
  std::uint64_t cap;
  if (!enumeration_cap(cap)) {
    exit_code = report_error(KBGQ_ERR_ARGUMENT, "KBGQ_ENUM_CAP must be a positive integer", "");
    return nullptr;
  }
  kbgq_spec* spec = nullptr;
  if (auto s = kbgq_spec_parse(text.data(), text.size(), cap, &spec); s != KBGQ_OK) {
    exit_code = report_last(s);
    return nullptr;
  }
  return spec;
}

int run_compute(const std::string& file) {
  int code = kExitOk;
  kbgq_spec* spec = load_spec(file, code);
  if (!spec) return code;
  kbgq_result* result = nullptr;
  auto s = kbgq_compute(spec, &result);
  kbgq_spec_free(spec);
  if (s != KBGQ_OK) return report_last(s);
  char* json = nullptr;
  s = kbgq_result_json(result, &json);
  kbgq_result_free(result);
  if (s != KBGQ_OK) return report_last(s);
  std::cout << json;
  kbgq_string_free(json);
  return kExitOk;
}

int run_chartab(const std::string& file) {
  int code = kExitOk;
  kbgq_spec* spec = load_spec(file, code);
  if (!spec) return code;
  char* json = nullptr;
  auto s = kbgq_chartab_json(spec, &json);
  kbgq_spec_free(spec);
  if (s != KBGQ_OK) return report_last(s);
  std::cout << json;
  kbgq_string_free(json);
  return kExitOk;
}

int run_selfcheck(const kbgq_selfcheck_options& opt) {
  char* json = nullptr;
  int outcome = KBGQ_OUTCOME_FAIL;
  if (auto s = kbgq_selfcheck(&opt, &json, &outcome); s != KBGQ_OK) return report_last(s);
  std::cout << json;
  kbgq_string_free(json);
  return outcome;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rationalized K-theory of classifying spaces: exact computations and self-checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kbgq_version());

  std::string compute_file, chartab_file;
  auto* compute = app.add_subcommand("compute", "Evaluate K^0 and K^1 for a group spec file");
  compute->add_option("file", compute_file, "JSON spec file")->required();

  auto* chartab = app.add_subcommand("chartab", "Print the exact character table of a finite_perm spec");
  chartab->add_option("file", chartab_file, "JSON spec file")->required();

  kbgq_selfcheck_options opt{24, 6, 0, 0, 0};
  bool corrupt = false;
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the verifier corpus");
  selfcheck->add_option("--max-order", opt.max_order, "Largest group order in the corpus")->check(CLI::Range(1, 1024));
  selfcheck->add_option("--depth", opt.depth, "Tower depth")->check(CLI::Range(2, 64));
  selfcheck->add_option("--seed", opt.seed, "Seed for the character table splitting");
  selfcheck->add_option("--threads", opt.threads, "Worker threads (0: all cores)");
  selfcheck->add_flag("--corrupt-constant", corrupt, "Test hook: perturb one ring structure constant")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (*compute) return run_compute(compute_file);
  if (*chartab) return run_chartab(chartab_file);
  opt.corrupt_constant = corrupt ? 1 : 0;
  return run_selfcheck(opt);
}
