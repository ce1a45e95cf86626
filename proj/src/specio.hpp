#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "assemble.hpp"
#include "chartab.hpp"

namespace kbgq {

using Json = nlohmann::ordered_json;

inline constexpr int kSpecVersion = 1;

struct SpecOptions {
  std::uint64_t depth = 6;
  unsigned bound = 12;
  std::vector<std::uint64_t> primes;  // report only these primes when nonempty
  bool ring = true;
};

struct SpecFile {
  int version = kSpecVersion;
  GroupSpec spec;
  SpecOptions options;
  std::vector<std::string> notes;
};

/// Throws ParseError with a JSON pointer to the offending field, or the
/// family's ValidationError.
SpecFile parse_spec(const std::string& text, std::uint64_t enumeration_cap = kDefaultEnumerationCap);

Json to_json(const KRationalResult& r, const SpecOptions& options = {});
Json to_json(const RingDescriptor& d);
Json to_json(const CharacterTable& t);
Json to_json(const Report& r);

/// The compute document: k0, k1, ring (when requested), notes.
Json compute_document(const SpecFile& f);

/// Serialized with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace kbgq
