#include "specio.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "error.hpp"

namespace kbgq {

namespace {

std::string join(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string join(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const Json& field(const Json& obj, const std::string& path, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(join(path, key), "missing field '" + key + "'");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint64_t as_uint(const Json& j, const std::string& path) {
  auto v = as_int(j, path);
  if (v < 0) throw ParseError(path, "expected a nonnegative integer");
  return static_cast<std::uint64_t>(v);
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

Betti as_betti(const Json& j, const std::string& path) {
  Betti b;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) b.push_back(as_uint(j[i], join(path, i)));
  return b;
}

std::uint64_t as_prime_key(const std::string& key, const std::string& path) {
  if (key.empty() || key.size() > 18 || key.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(path, "prime keys must be decimal strings");
  auto p = std::stoull(key);
  if (!is_prime(p)) throw ParseError(path, key + " is not prime");
  return p;
}

void check_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!ok.count(it.key())) throw ParseError(join(path, it.key()), "unknown field '" + it.key() + "'");
}

PermGroup parse_finite(const Json& s, const std::string& path, std::uint64_t cap) {
  check_keys(s, path, {"type", "degree", "generators"});
  const auto degree = as_uint(field(s, path, "degree"), join(path, "degree"));
  if (degree == 0 || degree > 4096) throw ParseError(join(path, "degree"), "degree must be in 1..4096");
  const auto gpath = join(path, "generators");
  const auto& gens = as_array(field(s, path, "generators"), gpath);
  std::vector<Perm> perms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto ipath = join(gpath, i);
    const auto& g = as_array(gens[i], ipath);
    if (g.size() != degree) throw ParseError(ipath, "a permutation needs exactly " + std::to_string(degree) + " images");
    std::vector<std::uint32_t> images;
    std::vector<bool> seen(degree, false);
    for (std::size_t k = 0; k < g.size(); ++k) {
      auto v = as_uint(g[k], join(ipath, k));
      if (v >= degree) throw ParseError(join(ipath, k), "image out of range");
      if (seen[v]) throw ParseError(join(ipath, k), "repeated image; not a permutation");
      seen[v] = true;
      images.push_back(static_cast<std::uint32_t>(v));
    }
    perms.push_back(Perm::from_images(std::move(images)));
  }
  return group_from_generators(degree, std::move(perms), cap);
}

CrystalSpec parse_crystal(const Json& s, const std::string& path) {
  check_keys(s, path, {"type", "p", "sigma"});
  CrystalSpec c;
  c.p = as_uint(field(s, path, "p"), join(path, "p"));
  const auto mpath = join(path, "sigma");
  const auto& rows = as_array(field(s, path, "sigma"), mpath);
  const auto n = rows.size();
  c.sigma = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto rpath = join(mpath, i);
    if (as_array(rows[i], rpath).size() != n) throw ParseError(rpath, "sigma must be square");
    for (std::size_t k = 0; k < n; ++k) c.sigma(i, k) = static_cast<long>(as_int(rows[i][k], join(rpath, k)));
  }
  return c;
}

FuchsianSpec parse_fuchsian(const Json& s, const std::string& path) {
  check_keys(s, path, {"type", "genus", "periods"});
  FuchsianSpec f;
  f.genus = as_uint(field(s, path, "genus"), join(path, "genus"));
  if (s.contains("periods")) {
    const auto ppath = join(path, "periods");
    const auto& ps = as_array(s["periods"], ppath);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      auto m = as_uint(ps[i], join(ppath, i));
      if (m < 2) throw ParseError(join(ppath, i), "periods must be at least 2");
      f.periods.push_back(m);
    }
  }
  return f;
}

OneRelatorSpec parse_one_relator(const Json& s, const std::string& path) {
  check_keys(s, path, {"type", "generators", "relator"});
  OneRelatorSpec o;
  const auto gpath = join(path, "generators");
  const auto& gens = as_array(field(s, path, "generators"), gpath);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_string()) throw ParseError(join(gpath, i), "expected a generator name");
    auto name = gens[i].get<std::string>();
    bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
    for (char ch : name) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
    if (!ok) throw ParseError(join(gpath, i), "generator names are identifiers");
    o.generators.push_back(name);
  }
  const auto& r = field(s, path, "relator");
  if (!r.is_string()) throw ParseError(join(path, "relator"), "expected a word");
  o.relator = r.get<std::string>();
  return o;
}

DirectDataSpec parse_direct(const Json& s, const std::string& path) {
  check_keys(s, path, {"type", "betti", "centralizers", "weyl_certified", "notes"});
  DirectDataSpec d;
  auto nit = s.find("notes");
  if (nit == s.end() || !nit->is_array() || nit->empty())
    throw ParseError(join(path, "notes"), "direct data must carry a nonempty provenance note");
  for (std::size_t i = 0; i < nit->size(); ++i) {
    if (!(*nit)[i].is_string() || (*nit)[i].get<std::string>().empty())
      throw ParseError(join(join(path, "notes"), i), "notes must be nonempty strings");
    d.notes.push_back((*nit)[i].get<std::string>());
  }
  d.betti = as_betti(field(s, path, "betti"), join(path, "betti"));
  if (d.betti.empty()) throw ParseError(join(path, "betti"), "betti must be nonempty");
  if (s.contains("centralizers")) {
    const auto cpath = join(path, "centralizers");
    const auto& cs = s["centralizers"];
    if (!cs.is_object()) throw ParseError(cpath, "expected an object keyed by prime");
    for (auto it = cs.begin(); it != cs.end(); ++it) {
      const auto ppath = join(cpath, it.key());
      auto p = as_prime_key(it.key(), ppath);
      const auto& recs = as_array(it.value(), ppath);
      for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto rpath = join(ppath, i);
        if (!recs[i].is_object()) throw ParseError(rpath, "expected a centralizer record");
        check_keys(recs[i], rpath, {"label", "betti"});
        CentralizerRecord rec;
        if (recs[i].contains("label")) {
          if (!recs[i]["label"].is_string()) throw ParseError(join(rpath, "label"), "expected a string");
          rec.label = recs[i]["label"].get<std::string>();
        }
        rec.betti = as_betti(field(recs[i], rpath, "betti"), join(rpath, "betti"));
        if (rec.betti.empty()) throw ParseError(join(rpath, "betti"), "betti must be nonempty");
        d.centralizers[p].push_back(std::move(rec));
      }
    }
  }
  if (s.contains("weyl_certified")) {
    if (!s["weyl_certified"].is_boolean()) throw ParseError(join(path, "weyl_certified"), "expected a boolean");
    d.weyl_certified = s["weyl_certified"].get<bool>();
  }
  return d;
}

SpecOptions parse_options(const Json& o, const std::string& path) {
  SpecOptions opt;
  if (!o.is_object()) throw ParseError(path, "expected an object");
  check_keys(o, path, {"depth", "bound", "primes", "ring"});
  if (o.contains("depth")) {
    opt.depth = as_uint(o["depth"], join(path, "depth"));
    if (opt.depth < 2 || opt.depth > 64) throw ParseError(join(path, "depth"), "depth must be in 2..64");
  }
  if (o.contains("bound")) {
    auto b = as_uint(o["bound"], join(path, "bound"));
    if (b < 1 || b > 64) throw ParseError(join(path, "bound"), "bound must be in 1..64");
    opt.bound = static_cast<unsigned>(b);
  }
  if (o.contains("primes")) {
    const auto ppath = join(path, "primes");
    const auto& ps = as_array(o["primes"], ppath);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      auto p = as_uint(ps[i], join(ppath, i));
      if (!is_prime(p)) throw ParseError(join(ppath, i), std::to_string(p) + " is not prime");
      opt.primes.push_back(p);
    }
  }
  if (o.contains("ring")) {
    if (!o["ring"].is_boolean()) throw ParseError(join(path, "ring"), "expected a boolean");
    opt.ring = o["ring"].get<bool>();
  }
  return opt;
}

Json counts_json(const PrimeCounts& c, const std::vector<std::uint64_t>& filter) {
  Json j = Json::object();
  for (auto [p, n] : c) {
    if (!filter.empty() && std::find(filter.begin(), filter.end(), p) == filter.end()) continue;
    j[std::to_string(p)] = n;
  }
  return j;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& v = m(r, c);
      if (v.fits_slong_p())
        row.push_back(v.get_si());
      else
        row.push_back(v.get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

SpecFile parse_spec(const std::string& text, std::uint64_t enumeration_cap) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("", "expected a JSON object");
  check_keys(doc, "", {"version", "spec", "options", "notes"});
  SpecFile f;
  f.version = static_cast<int>(as_int(field(doc, "", "version"), "/version"));
  if (f.version != kSpecVersion) throw ParseError("/version", "unsupported version " + std::to_string(f.version));
  if (doc.contains("notes")) {
    const auto& ns = as_array(doc["notes"], "/notes");
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (!ns[i].is_string()) throw ParseError(join("/notes", i), "expected a string");
      f.notes.push_back(ns[i].get<std::string>());
    }
  }
  if (doc.contains("options")) f.options = parse_options(doc["options"], "/options");
  const auto& s = field(doc, "", "spec");
  if (!s.is_object()) throw ParseError("/spec", "expected an object");
  const auto& t = field(s, "/spec", "type");
  if (!t.is_string()) throw ParseError("/spec/type", "expected a string");
  const auto type = t.get<std::string>();
  if (type == "finite_perm")
    f.spec = parse_finite(s, "/spec", enumeration_cap);
  else if (type == "crystallographic")
    f.spec = parse_crystal(s, "/spec");
  else if (type == "fuchsian")
    f.spec = parse_fuchsian(s, "/spec");
  else if (type == "one_relator")
    f.spec = parse_one_relator(s, "/spec");
  else if (type == "direct")
    f.spec = parse_direct(s, "/spec");
  else
    throw ParseError("/spec/type", "unknown family '" + type +
                                       "'; supported: finite_perm, crystallographic, fuchsian, one_relator, direct");
  if (const auto* c = std::get_if<CrystalSpec>(&f.spec))
    validate(*c);
  else if (const auto* fu = std::get_if<FuchsianSpec>(&f.spec))
    validate(*fu);
  else if (const auto* o = std::get_if<OneRelatorSpec>(&f.spec))
    one_relator_analyze(*o);
  return f;
}

Json to_json(const KRationalResult& r, const SpecOptions& options) {
  Json j;
  j["k0"] = {{"rational_rank", r.k0.rational_rank},
             {"even_betti", r.k0.betti},
             {"p_adic", counts_json(r.k0.p_adic, options.primes)}};
  j["k1"] = {{"rational_rank", r.k1.rational_rank},
             {"odd_betti", r.k1.betti},
             {"p_adic", counts_json(r.k1.p_adic, options.primes)}};
  j["torsion"] = torsion_criterion(r);
  Json notes = Json::array();
  for (const auto& n : r.notes) notes.push_back({{"code", n.code}, {"message", n.message}});
  j["notes"] = notes;
  return j;
}

Json to_json(const RingDescriptor& d) {
  Json j;
  j["present"] = d.present;
  if (!d.present) {
    j["reason"] = d.reason;
    return j;
  }
  j["kind"] = d.kind;
  j["law"] = d.law;
  if (d.weyl_full) j["weyl_full"] = *d.weyl_full;
  if (!d.per_prime.empty()) {
    Json primes = Json::object();
    for (const auto& rs : d.per_prime) {
      const auto n = rs.basis.rows();
      Json consts = Json::array();
      for (std::size_t a = 0; a < n; ++a) {
        IntMatrix m(n, n);
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) m(b, c) = rs.constants.at(a, b, c);
        consts.push_back(matrix_json(m));
      }
      primes[std::to_string(rs.p)] = {{"basis", matrix_json(rs.basis)}, {"constants", consts}};
    }
    j["primes"] = primes;
  }
  if (!d.factors.empty()) j["factors"] = counts_json(d.factors, {});
  return j;
}

Json to_json(const CharacterTable& t) {
  Json j;
  j["order"] = t.group_order();
  Json classes = Json::array();
  for (const auto& c : t.classes())
    classes.push_back({{"representative", c.representative.to_cycle_string()},
                       {"size", c.size},
                       {"element_order", c.element_order},
                       {"centralizer_order", c.centralizer_order}});
  j["classes"] = classes;
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < t.size(); ++c) row.push_back(t.value(i, c).to_string());
    rows.push_back(row);
  }
  j["characters"] = rows;
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["name"] = r.name;
  j["status"] = r.pass() ? "pass" : "fail";
  j["failures"] = r.failures;
  j["details"] = r.details;
  return j;
}

Json compute_document(const SpecFile& f) {
  Json j;
  j["family"] = family_name(f.spec);
  auto r = k_rational(f.spec);
  auto body = to_json(r, f.options);
  for (auto it = body.begin(); it != body.end(); ++it) {
    if (it.key() == "notes") continue;
    j[it.key()] = it.value();
  }
  if (f.options.ring) j["ring"] = to_json(ring_structure(f.spec));
  j["notes"] = body["notes"];
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kbgq
